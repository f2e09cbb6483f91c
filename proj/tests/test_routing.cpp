#include <vector>

#include "doctest.h"
#include "qbench/compile.hpp"
#include "qbench/errors.hpp"
#include "qbench/routing.hpp"

using namespace qbench;

namespace {
DeviceModel bundled(const std::string& name) {
  return load_device(std::string(QBENCH_TEST_DATA_DIR) + "/" + name + ".json");
}

CouplingMap full_map(int n) {
  CouplingMap map;
  map.n_qubits = n;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (a != b) map.edges.emplace_back(a, b);
  return map;
}
}  // namespace

TEST_CASE("conforming circuits route without swaps") {
  const DeviceModel dev = bundled("ibmq_ourense");
  Circuit c(5);
  c.add(Gate::h(0));
  c.add(Gate::cx(0, 1));
  c.add(Gate::cx(1, 3));
  const RoutedCircuit r = route(c, dev.coupling, Placement::identity(5));
  CHECK(r.swap_count == 0);
  CHECK(r.circuit.size() == c.size());
  CHECK(r.final_map.virtual_to_physical ==
        Placement::identity(5).virtual_to_physical);
}

TEST_CASE("fully connected maps never need swaps") {
  const CouplingMap map = full_map(5);
  Circuit c(5);
  c.add(Gate::cx(0, 4));
  c.add(Gate::cx(1, 3));
  c.add(Gate::cx(2, 0));
  const RoutedCircuit r = route(c, map, Placement::identity(5));
  CHECK(r.swap_count == 0);
}

TEST_CASE("distant interaction inserts swaps and stays equivalent") {
  const DeviceModel dev = bundled("ibmq_ourense");
  Circuit c(5);
  c.add(Gate::h(0));
  c.add(Gate::cx(0, 4));  // physical distance 3 on ourense
  const RoutedCircuit r = route(c, dev.coupling, Placement::identity(5));
  CHECK(r.swap_count >= 1);
  CHECK(conforms_to_map(r.circuit, dev.coupling));
  CompileResult as_result{r.circuit, r.initial, r.final_map, r.swap_count};
  CHECK(compiled_deviation(c, as_result) < 1e-7);
}

TEST_CASE("routing tracks the permutation across many gates") {
  const DeviceModel dev = bundled("ibmqx2");
  Rng rng(7);
  for (int trial = 0; trial < 10; ++trial) {
    Circuit c(5);
    for (int g = 0; g < 8; ++g) {
      const auto a = static_cast<std::uint32_t>(rng.uniform_int(5));
      auto b = static_cast<std::uint32_t>(rng.uniform_int(5));
      while (b == a) b = static_cast<std::uint32_t>(rng.uniform_int(5));
      c.add(Gate::cx(a, b));
    }
    const RoutedCircuit r = route(c, dev.coupling, Placement::identity(5));
    CHECK(conforms_to_map(r.circuit, dev.coupling));
    CompileResult as_result{r.circuit, r.initial, r.final_map, r.swap_count};
    CHECK(compiled_deviation(c, as_result) < 1e-7);
  }
}

TEST_CASE("wrong-direction cx is rewritten with hadamards") {
  const auto dev = parse_device_json(R"({
    "name": "oneway", "n_qubits": 2, "directed": true, "edges": [[0,1]]})");
  Circuit c(2);
  c.add(Gate::cx(1, 0));  // against the only edge
  const RoutedCircuit r = route(c, dev.coupling, Placement::identity(2));
  CHECK(conforms_to_map(r.circuit, dev.coupling));
  CHECK(gate_count(r.circuit, GateKind::H) == 4);
  CompileResult as_result{r.circuit, r.initial, r.final_map, r.swap_count};
  CHECK(compiled_deviation(c, as_result) < 1e-12);
}

TEST_CASE("fix_cx_directions leaves conforming circuits alone") {
  const DeviceModel dev = bundled("ibmqx2");
  Circuit c(5);
  c.add(Gate::cx(0, 1));
  c.add(Gate::h(2));
  const Circuit fixed = fix_cx_directions(c, dev.coupling);
  CHECK(fixed.size() == c.size());
}
