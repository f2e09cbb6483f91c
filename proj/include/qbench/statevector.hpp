#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "qbench/circuit.hpp"

namespace qbench {

/// 2^n complex amplitudes, qubit 0 at the most significant index bit.
class StateVector {
 public:
  explicit StateVector(int n_qubits);  // |0...0>

  int n_qubits() const { return n_qubits_; }
  std::size_t dim() const { return amps_.size(); }
  const std::vector<std::complex<double>>& amplitudes() const { return amps_; }
  std::complex<double>& operator[](std::size_t i) { return amps_[i]; }
  const std::complex<double>& operator[](std::size_t i) const {
    return amps_[i];
  }

  void apply(const Gate& gate);

  double norm_sq() const;

 private:
  int n_qubits_;
  std::vector<std::complex<double>> amps_;
};

/// Dense probability table of an n-qubit circuit: probs[x] = |<x|C|0^n>|^2.
struct ProbabilityTable {
  int n_qubits = 0;
  std::vector<double> probs;

  std::size_t dim() const { return probs.size(); }
  double total() const;

  static ProbabilityTable uniform(int n_qubits);
  static ProbabilityTable point_mass(int n_qubits, std::uint64_t index);
};

/// Evolve |0^n> through the circuit (measurement ignored).
/// Guarded to n_qubits <= 20.
StateVector statevector(const Circuit& circuit);

/// Squared magnitudes of the final state.
ProbabilityTable output_probabilities(const Circuit& circuit);

}  // namespace qbench
