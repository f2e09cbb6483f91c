#pragma once

#include <vector>

#include "qbench/circuit.hpp"
#include "qbench/device.hpp"

namespace qbench {

/// Injective map virtual qubit -> physical qubit.
struct Placement {
  std::vector<int> virtual_to_physical;

  int physical(int virtual_q) const { return virtual_to_physical[virtual_q]; }
  int size() const { return static_cast<int>(virtual_to_physical.size()); }

  static Placement identity(int n);
  void validate(int n_virtual, int n_physical) const;
};

/// Cost weights of noise-aware placement: two-qubit gate error dominates
/// by default; (1, 0, 1) mirrors strategies that prioritise readout.
struct PlacementWeights {
  double two_qubit = 1.0;
  double single_qubit = 0.1;
  double readout = 0.0;
};

/// Place interacting qubits next to each other: virtual qubits ordered by
/// first interaction time walk a BFS path of the device graph.
Placement line_placement(const Circuit& circuit, const CouplingMap& map);

/// Greedy assignment minimising summed error cost: shortest-path two-qubit
/// error per interaction, plus per-qubit single-qubit/readout terms.
/// Ties break to the lowest physical index.
Placement noise_aware_placement(const Circuit& circuit, const CouplingMap& map,
                                const CalibrationData& cal,
                                const PlacementWeights& weights = {});

}  // namespace qbench
