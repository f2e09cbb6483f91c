#include "doctest.h"
#include "qbench/circuit.hpp"
#include "qbench/errors.hpp"

using namespace qbench;

TEST_CASE("gate qubit validation") {
  Circuit c(2);
  CHECK_THROWS_AS(c.add(Gate::h(2)), WidthError);
  CHECK_THROWS_AS(c.add(Gate::cx(0, 0)), GateError);
  CHECK_THROWS_AS(c.add(Gate::cx(0, 5)), WidthError);
  CHECK_THROWS_AS(c.add(Gate::rz(0, std::nan(""))), GateError);
  c.add(Gate::cx(1, 0));
  CHECK(c.size() == 1);
}

TEST_CASE("su4 payload must be unitary") {
  Su4Matrix m{};
  for (int i = 0; i < 4; ++i) m[i * 4 + i] = 1.0;
  CHECK_NOTHROW(Gate::su4(0, 1, m));
  m[0] = 2.0;
  CHECK_THROWS_AS(Gate::su4(0, 1, m), GateError);
}

TEST_CASE("depth follows ASAP layering") {
  Circuit c(3);
  CHECK(circuit_depth(c) == 0);
  c.add(Gate::h(0));
  c.add(Gate::h(1));
  CHECK(circuit_depth(c) == 1);  // disjoint qubits share a layer
  c.add(Gate::cx(0, 1));
  CHECK(circuit_depth(c) == 2);
  c.add(Gate::h(2));
  CHECK(circuit_depth(c) == 2);
}

TEST_CASE("depth is bounded by gate count and monotone under append") {
  Circuit c(4);
  int prev_depth = 0;
  for (int i = 0; i < 12; ++i) {
    c.add(Gate::cx(static_cast<std::uint32_t>(i % 3),
                   static_cast<std::uint32_t>((i + 1) % 4 == i % 3
                                                  ? (i + 2) % 4
                                                  : (i + 1) % 4)));
    const int d = circuit_depth(c);
    CHECK(d >= prev_depth);
    CHECK(static_cast<std::size_t>(d) <= gate_count(c));
    prev_depth = d;
  }
}

TEST_CASE("gate_count filters by kind") {
  Circuit c(2);
  CHECK(gate_count(c) == 0);
  c.add(Gate::h(0));
  c.add(Gate::h(1));
  c.add(Gate::cx(0, 1));
  CHECK(gate_count(c) == 3);
  CHECK(gate_count(c, GateKind::H) == 2);
  CHECK(gate_count(c, GateKind::CX) == 1);
  CHECK(gate_count(c, GateKind::SWAP) == 0);
}

TEST_CASE("bitstring convention: qubit 0 is the leftmost character") {
  CHECK(index_to_bitstring(0, 3) == "000");
  CHECK(index_to_bitstring(4, 3) == "100");  // qubit 0 set
  CHECK(index_to_bitstring(1, 3) == "001");  // qubit 2 set
  CHECK(bitstring_to_index("100") == 4);
  CHECK(bitstring_to_index("011") == 3);
  CHECK_THROWS_AS(bitstring_to_index("10x"), InputError);
}
