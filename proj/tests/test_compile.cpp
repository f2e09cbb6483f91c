#include <algorithm>
#include <utility>
#include <vector>

#include "doctest.h"
#include "qbench/compile.hpp"
#include "qbench/errors.hpp"
#include "qbench/generators.hpp"
#include "qbench/rebase.hpp"

using namespace qbench;

namespace {
DeviceModel bundled(const std::string& name) {
  return load_device(std::string(QBENCH_TEST_DATA_DIR) + "/" + name + ".json");
}
}  // namespace

TEST_CASE("compiled circuits are native and map-conforming") {
  const DeviceModel dev = bundled("ibmqx2");
  Rng rng(3);
  for (CircuitClass cls :
       {CircuitClass::Shallow, CircuitClass::Square, CircuitClass::Deep}) {
    Rng gen(rng.next_u64());
    const Circuit c = generate(cls, 4, gen);
    for (Strategy strategy : {Strategy::RoutingOnly, Strategy::LineUnaware,
                              Strategy::NoiseAware}) {
      const CompileResult r = compile(c, dev, strategy);
      CHECK(is_native(r.circuit));
      CHECK(conforms_to_map(r.circuit, dev.coupling));
      CHECK(compiled_deviation(c, r) < 1e-7);
    }
  }
}

TEST_CASE("routing_only on a conforming native circuit is a no-op") {
  const DeviceModel dev = bundled("ibmq_ourense");
  Circuit c(5);
  c.add(Gate::u3(0, 0.1, 0.2, 0.3));
  c.add(Gate::cx(0, 1));
  c.add(Gate::u1(3, 0.7));
  c.add(Gate::cx(1, 3));
  const CompileResult r = compile(c, dev, Strategy::RoutingOnly);
  REQUIRE(r.circuit.size() == c.size());
  for (std::size_t i = 0; i < c.size(); ++i) {
    CHECK(r.circuit.gates()[i].kind == c.gates()[i].kind);
    CHECK(r.circuit.gates()[i].qubits == c.gates()[i].qubits);
  }
  CHECK(r.swap_count == 0);
}

TEST_CASE("noise-aware beats line placement on a one-noisy-edge map") {
  // ring 0-1-2-3-0 with one terrible edge; cost per the
  // noise_aware_placement objective (shortest-path two-qubit error sums)
  DeviceModel dev;
  dev.name = "ring";
  dev.coupling.n_qubits = 4;
  for (auto [a, b] : std::vector<std::pair<int, int>>{{0, 1}, {1, 2}, {2, 3},
                                                      {3, 0}}) {
    dev.coupling.edges.emplace_back(a, b);
    dev.coupling.edges.emplace_back(b, a);
  }
  dev.calibration.readout.assign(4, 0.01);
  dev.calibration.single_qubit.assign(4, 0.001);
  auto set_edge = [&](int a, int b, double e) {
    dev.calibration.two_qubit[{a, b}] = e;
    dev.calibration.two_qubit[{b, a}] = e;
  };
  set_edge(0, 1, 0.5);
  set_edge(1, 2, 0.01);
  set_edge(2, 3, 0.01);
  set_edge(3, 0, 0.01);

  Circuit c(2);
  for (int i = 0; i < 6; ++i) c.add(Gate::cx(0, 1));

  auto pair_error_cost = [&](const Placement& p) {
    // shortest-path error sum between the placed endpoints (ring: direct
    // edge or the three-hop way around)
    const int a = p.physical(0), b = p.physical(1);
    const UndirectedGraph g = dev.coupling.skeleton();
    double direct = g.has_edge(a, b) ? dev.calibration.two_qubit_error(a, b)
                                     : 1e9;
    double around = 0.0;
    // other path on a 4-ring: through the two remaining vertices
    std::vector<int> rest;
    for (int v = 0; v < 4; ++v)
      if (v != a && v != b) rest.push_back(v);
    if (g.has_edge(a, rest[0]) && g.has_edge(rest[0], rest[1]) &&
        g.has_edge(rest[1], b)) {
      around = dev.calibration.two_qubit_error(a, rest[0]) +
               dev.calibration.two_qubit_error(rest[0], rest[1]) +
               dev.calibration.two_qubit_error(rest[1], b);
    } else {
      around = 1e9;
    }
    return 6.0 * std::min(direct, around);
  };

  const Placement line = line_placement(c, dev.coupling);
  const Placement aware =
      noise_aware_placement(c, dev.coupling, dev.calibration);
  CHECK(pair_error_cost(aware) <= pair_error_cost(line) + 1e-12);
  // and the noisy edge is avoided outright
  const auto placed = std::minmax(aware.physical(0), aware.physical(1));
  CHECK_FALSE((placed.first == 0 && placed.second == 1));
}

TEST_CASE("compile rejects circuits wider than the device") {
  const DeviceModel dev = bundled("ibmqx2");
  CHECK_THROWS_AS(compile(Circuit(6), dev, Strategy::LineUnaware), WidthError);
}

TEST_CASE("all strategies on all devices stay equivalent (n <= 5)") {
  Rng rng(7);
  for (const auto& name : bundled_device_names()) {
    const DeviceModel dev = bundled(name);
    Rng gen(rng.next_u64());
    const Circuit c = gen_square(5, gen);
    for (Strategy strategy : {Strategy::RoutingOnly, Strategy::LineUnaware,
                              Strategy::NoiseAware}) {
      const CompileResult r = compile(c, dev, strategy);
      CHECK(is_native(r.circuit));
      CHECK(conforms_to_map(r.circuit, dev.coupling));
      CHECK(compiled_deviation(c, r) < 1e-7);
    }
  }
}

TEST_CASE("restrict_to_used keeps only touched qubits") {
  const DeviceModel dev = bundled("ibmq_singapore");
  Rng gen(11);
  const Circuit c = gen_square(3, gen);
  const CompileResult r = compile(c, dev, Strategy::LineUnaware);
  const RestrictedCircuit restricted =
      restrict_to_used(r.circuit, r.final_map);
  CHECK(restricted.circuit.n_qubits() <= 8);
  CHECK(restricted.circuit.n_qubits() >= 3);
  CHECK(restricted.used.size() ==
        static_cast<std::size_t>(restricted.circuit.n_qubits()));
}
