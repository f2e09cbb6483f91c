#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qbench/graph.hpp"
#include "qbench/sampling.hpp"

namespace qbench {

/// Directed graph of allowed two-qubit interactions.
struct CouplingMap {
  int n_qubits = 0;
  std::vector<std::pair<int, int>> edges;  // (control, target)

  bool has_directed(int a, int b) const;
  bool has_undirected(int a, int b) const;

  /// Undirected skeleton; throws if it is disconnected.
  UndirectedGraph skeleton() const;
};

/// Per-qubit readout/single-qubit error, per-directed-edge two-qubit error.
struct CalibrationData {
  std::vector<double> readout;
  std::vector<double> single_qubit;
  std::map<std::pair<int, int>, double> two_qubit;

  double two_qubit_error(int a, int b) const;
  void validate(int n_qubits) const;
};

struct DeviceModel {
  std::string name;
  CouplingMap coupling;
  CalibrationData calibration;

  NoiseModel noise_model() const;
};

/// Aggregate coupling-graph properties reported per device.
struct GraphProperties {
  int vertices = 0;
  double average_degree = 0.0;
  int radius = 0;
  std::optional<int> min_cycle_length;  // absent for forests
};

/// Degree / radius / girth of the undirected skeleton.
GraphProperties graph_properties(const CouplingMap& map);

/// eps_a = (Pr("0"|1) + Pr("1"|0)) / 2.
double readout_error(double p0_given_1, double p1_given_0);

/// Error per Clifford: (1 - p)(1 - 1/D), D = 2^n.
double rb_error_per_clifford(double decay_p, int n_qubits);

/// Pauli error: (1 - p)(1 - 1/D^2).
double pauli_error(double decay_p, int n_qubits);

/// Device file I/O.  Format: {"name", "n_qubits", "edges": [[a,b],...],
/// "directed": bool (default false => every edge both ways),
/// "calibration": {"readout": [...], "single_qubit": [...],
///                 "two_qubit": {"a-b": eps, ...}}}.
DeviceModel load_device(const std::string& path);
DeviceModel parse_device_json(const std::string& text);

/// Bundled device lookup: name -> $QBENCH_DEVICE_DIR/name.json, falling
/// back to the build-time data directory.  Paths containing '/' or
/// ending in .json are loaded directly.
DeviceModel resolve_device(const std::string& name_or_path);
std::vector<std::string> bundled_device_names();

}  // namespace qbench
