#pragma once

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "qbench/circuit.hpp"
#include "qbench/rng.hpp"
#include "qbench/statevector.hpp"

namespace qbench {

/// Multiset of measured bitstrings from one circuit execution.
struct SampleSet {
  int n_qubits = 0;
  std::map<std::uint64_t, std::uint64_t> counts;
  std::uint64_t k = 0;  // total samples

  void insert(std::uint64_t bits, std::uint64_t times = 1) {
    counts[bits] += times;
    k += times;
  }
};

/// Simplified stochastic noise model: probability of injecting a random
/// non-identity Pauli after each gate (per qubit count), plus a symmetric
/// per-qubit readout flip probability.
struct NoiseModel {
  std::vector<double> single_qubit;               // per qubit
  std::map<std::pair<int, int>, double> two_qubit;  // per directed edge
  std::vector<double> readout;                    // per qubit

  /// Same rates everywhere (all ordered qubit pairs populated).
  static NoiseModel uniform(int n_qubits, double eps1, double eps2,
                            double eps_readout);
  static NoiseModel zero(int n_qubits) {
    return uniform(n_qubits, 0.0, 0.0, 0.0);
  }

  double two_qubit_rate(int a, int b) const;
  bool is_zero() const;
  void validate(int n_qubits) const;
};

/// k i.i.d. draws from the table via inverse-CDF over cumulative sums.
SampleSet sample_ideal(const ProbabilityTable& table, std::uint64_t shots,
                       Rng& rng);

/// k uniform bitstrings (the "trivial mimic" sampler).
SampleSet sample_uniform(int n_qubits, std::uint64_t shots, Rng& rng);

/// Per-shot Pauli-injection trajectories over a native-gate circuit
/// (U1/U2/U3/CX only), followed by independent readout flips.  With all
/// rates zero this consumes randomness exactly like sample_ideal and is
/// bit-identical to it under the same seed.
SampleSet sample_noisy(const Circuit& circuit, const NoiseModel& noise,
                       std::uint64_t shots, Rng& rng);

}  // namespace qbench
