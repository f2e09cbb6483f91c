#include "qbench/device.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "qbench/errors.hpp"

#ifndef QBENCH_DATA_DIR
#define QBENCH_DATA_DIR "data/devices"
#endif

namespace qbench {

bool CouplingMap::has_directed(int a, int b) const {
  return std::find(edges.begin(), edges.end(), std::make_pair(a, b)) !=
         edges.end();
}

bool CouplingMap::has_undirected(int a, int b) const {
  return has_directed(a, b) || has_directed(b, a);
}

UndirectedGraph CouplingMap::skeleton() const {
  UndirectedGraph g(n_qubits);
  for (const auto& [a, b] : edges)
    if (!g.has_edge(a, b)) g.add_edge(a, b);
  if (!g.connected())
    throw InputError("coupling map skeleton is disconnected");
  return g;
}

double CalibrationData::two_qubit_error(int a, int b) const {
  auto it = two_qubit.find({a, b});
  if (it != two_qubit.end()) return it->second;
  it = two_qubit.find({b, a});
  if (it != two_qubit.end()) return it->second;
  return 0.0;
}

void CalibrationData::validate(int n_qubits) const {
  auto in_range = [](double x) { return x >= 0.0 && x < 1.0; };
  if (static_cast<int>(readout.size()) != n_qubits ||
      static_cast<int>(single_qubit.size()) != n_qubits)
    throw InputError("calibration arrays must have one entry per qubit");
  for (double x : readout)
    if (!in_range(x)) throw InputError("readout error outside [0,1)");
  for (double x : single_qubit)
    if (!in_range(x)) throw InputError("single-qubit error outside [0,1)");
  for (const auto& [e, x] : two_qubit)
    if (!in_range(x)) throw InputError("two-qubit error outside [0,1)");
}

NoiseModel DeviceModel::noise_model() const {
  NoiseModel m;
  m.single_qubit = calibration.single_qubit;
  m.readout = calibration.readout;
  m.two_qubit = calibration.two_qubit;
  return m;
}

GraphProperties graph_properties(const CouplingMap& map) {
  const UndirectedGraph g = map.skeleton();
  GraphProperties p;
  p.vertices = g.n_vertices();
  p.average_degree =
      2.0 * static_cast<double>(g.edges().size()) / g.n_vertices();

  // radius = min over vertices of BFS eccentricity
  int radius = -1;
  for (int v = 0; v < g.n_vertices(); ++v) {
    const auto dist = g.bfs_distances(v);
    const int ecc = *std::max_element(dist.begin(), dist.end());
    if (radius < 0 || ecc < radius) radius = ecc;
  }
  p.radius = radius;

  // girth by per-vertex BFS: shortest cycle through v is found when an
  // edge closes between two reached vertices
  int girth = -1;
  for (int v = 0; v < g.n_vertices(); ++v) {
    std::vector<int> dist(static_cast<std::size_t>(g.n_vertices()), -1);
    std::vector<int> parent(static_cast<std::size_t>(g.n_vertices()), -1);
    std::vector<int> queue{v};
    dist[static_cast<std::size_t>(v)] = 0;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const int x = queue[head];
      for (int y : g.neighbours(x)) {
        if (dist[static_cast<std::size_t>(y)] < 0) {
          dist[static_cast<std::size_t>(y)] = dist[static_cast<std::size_t>(x)] + 1;
          parent[static_cast<std::size_t>(y)] = x;
          queue.push_back(y);
        } else if (parent[static_cast<std::size_t>(x)] != y) {
          const int cycle = dist[static_cast<std::size_t>(x)] +
                            dist[static_cast<std::size_t>(y)] + 1;
          if (girth < 0 || cycle < girth) girth = cycle;
        }
      }
    }
  }
  if (girth > 0) p.min_cycle_length = girth;
  return p;
}

double readout_error(double p0_given_1, double p1_given_0) {
  if (p0_given_1 < 0.0 || p0_given_1 > 1.0 || p1_given_0 < 0.0 ||
      p1_given_0 > 1.0)
    throw InputError("readout_error: probabilities must be in [0,1]");
  return 0.5 * (p0_given_1 + p1_given_0);
}

double rb_error_per_clifford(double decay_p, int n_qubits) {
  if (decay_p < 0.0 || decay_p > 1.0)
    throw InputError("rb_error_per_clifford: decay must be in [0,1]");
  if (n_qubits < 1) throw InputError("rb_error_per_clifford: need n >= 1");
  const double dim = std::pow(2.0, n_qubits);
  return (1.0 - decay_p) * (1.0 - 1.0 / dim);
}

double pauli_error(double decay_p, int n_qubits) {
  if (decay_p < 0.0 || decay_p > 1.0)
    throw InputError("pauli_error: decay must be in [0,1]");
  if (n_qubits < 1) throw InputError("pauli_error: need n >= 1");
  const double dim = std::pow(2.0, n_qubits);
  return (1.0 - decay_p) * (1.0 - 1.0 / (dim * dim));
}

namespace {
std::pair<int, int> parse_edge_key(const std::string& key) {
  const auto dash = key.find('-');
  if (dash == std::string::npos)
    throw InputError("two_qubit key must look like \"a-b\": " + key);
  return {std::stoi(key.substr(0, dash)), std::stoi(key.substr(dash + 1))};
}
}  // namespace

DeviceModel parse_device_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError(std::string("device file is not valid JSON: ") + e.what());
  }

  DeviceModel dev;
  dev.name = j.value("name", "unnamed");
  dev.coupling.n_qubits = j.at("n_qubits").get<int>();
  if (dev.coupling.n_qubits < 1)
    throw InputError("device needs at least one qubit");
  const bool directed = j.value("directed", false);
  for (const auto& e : j.at("edges")) {
    const int a = e.at(0).get<int>();
    const int b = e.at(1).get<int>();
    if (a < 0 || b < 0 || a >= dev.coupling.n_qubits ||
        b >= dev.coupling.n_qubits || a == b)
      throw InputError("device edge endpoints out of range");
    dev.coupling.edges.emplace_back(a, b);
    if (!directed) dev.coupling.edges.emplace_back(b, a);
  }

  const int n = dev.coupling.n_qubits;
  auto& cal = dev.calibration;
  if (j.contains("calibration")) {
    const auto& c = j.at("calibration");
    cal.readout = c.value("readout", std::vector<double>(n, 0.0));
    cal.single_qubit = c.value("single_qubit", std::vector<double>(n, 0.0));
    if (c.contains("two_qubit")) {
      for (const auto& [key, value] : c.at("two_qubit").items()) {
        const auto [a, b] = parse_edge_key(key);
        cal.two_qubit[{a, b}] = value.get<double>();
        if (!directed) cal.two_qubit[{b, a}] = value.get<double>();
      }
    }
  } else {
    cal.readout.assign(static_cast<std::size_t>(n), 0.0);
    cal.single_qubit.assign(static_cast<std::size_t>(n), 0.0);
  }
  cal.validate(n);
  dev.coupling.skeleton();  // connectivity check
  return dev;
}

DeviceModel load_device(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open device file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_device_json(buf.str());
}

namespace {
std::string data_dir() {
  if (const char* env = std::getenv("QBENCH_DEVICE_DIR")) return env;
  return QBENCH_DATA_DIR;
}
}  // namespace

DeviceModel resolve_device(const std::string& name_or_path) {
  const bool is_path = name_or_path.find('/') != std::string::npos ||
                       name_or_path.size() > 5 &&
                           name_or_path.substr(name_or_path.size() - 5) ==
                               ".json";
  if (is_path) return load_device(name_or_path);
  return load_device(data_dir() + "/" + name_or_path + ".json");
}

std::vector<std::string> bundled_device_names() {
  return {"ibmqx2", "ibmq_ourense", "ibmq_16_melbourne", "ibmq_singapore"};
}

}  // namespace qbench
