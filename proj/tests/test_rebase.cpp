#include "doctest.h"
#include "qbench/generators.hpp"
#include "qbench/rebase.hpp"
#include "qbench/unitary.hpp"

using namespace qbench;

TEST_CASE("h maps to u2(0, pi) exactly") {
  Circuit c(1);
  c.add(Gate::h(0));
  const Circuit r = rebase(c);
  REQUIRE(r.size() == 1);
  CHECK(r.gates()[0].kind == GateKind::U2);
  CHECK((circuit_unitary(r) - circuit_unitary(c)).cwiseAbs().maxCoeff() <
        1e-15);
}

TEST_CASE("already-native circuits pass through unchanged") {
  Circuit c(2);
  c.add(Gate::u1(0, 0.4));
  c.add(Gate::u2(1, 0.1, 0.2));
  c.add(Gate::u3(0, 1.0, 2.0, 3.0));
  c.add(Gate::cx(0, 1));
  const Circuit r = rebase(c);
  REQUIRE(r.size() == c.size());
  for (std::size_t i = 0; i < c.size(); ++i) {
    CHECK(r.gates()[i].kind == c.gates()[i].kind);
    CHECK(r.gates()[i].params == c.gates()[i].params);
  }
}

TEST_CASE("every source gate kind rebases to natives mod phase") {
  Rng rng(3);
  Circuit c(2);
  c.add(Gate::h(0));
  c.add(Gate::x(1));
  c.add(Gate::y(0));
  c.add(Gate::z(1));
  c.add(Gate::rx(0, 1.1));
  c.add(Gate::rz(1, -0.7));
  c.add(Gate::cz(0, 1));
  c.add(Gate::swap(0, 1));
  c.add(Gate::su4(0, 1, haar_su4(rng)));
  const Circuit r = rebase(c);
  CHECK(is_native(r));
  CHECK(phase_distance(circuit_unitary(r), circuit_unitary(c)) < 1e-7);
}

TEST_CASE("square circuits rebase to natives within 1e-7") {
  Rng rng(5);
  for (int trial = 0; trial < 5; ++trial) {
    Rng gen(rng.next_u64());
    const Circuit c = gen_square(3, gen);
    const Circuit r = rebase(c);
    CHECK(is_native(r));
    CHECK(gate_count(r, GateKind::SU4) == 0);
    CHECK(phase_distance(circuit_unitary(r), circuit_unitary(c)) < 1e-7);
  }
}

TEST_CASE("fusion merges single-qubit runs into one u3") {
  Circuit c(2);
  c.add(Gate::h(0));
  c.add(Gate::rz(0, 0.3));
  c.add(Gate::rx(0, 1.2));
  c.add(Gate::h(1));
  c.add(Gate::cx(0, 1));
  c.add(Gate::rz(1, 0.5));
  const Circuit fused = fuse_single_qubit_gates(c);
  // q0 run of 3 -> 1, q1 run of 1 -> 1, cx, trailing rz -> 1
  CHECK(fused.size() == 4);
  CHECK(phase_distance(circuit_unitary(fused), circuit_unitary(c)) < 1e-10);
}

TEST_CASE("fusion drops identity runs") {
  Circuit c(1);
  c.add(Gate::h(0));
  c.add(Gate::h(0));
  const Circuit fused = fuse_single_qubit_gates(c);
  CHECK(fused.size() == 0);
}

TEST_CASE("fusion preserves two-qubit gate order") {
  Rng rng(7);
  for (int trial = 0; trial < 5; ++trial) {
    Rng gen(rng.next_u64());
    const Circuit c = rebase(gen_deep(3, gen, 4));
    const Circuit fused = fuse_single_qubit_gates(c);
    std::vector<std::pair<std::uint32_t, std::uint32_t>> before, after;
    for (const Gate& g : c.gates())
      if (g.arity() == 2) before.emplace_back(g.qubits[0], g.qubits[1]);
    for (const Gate& g : fused.gates())
      if (g.arity() == 2) after.emplace_back(g.qubits[0], g.qubits[1]);
    CHECK(before == after);
    CHECK(phase_distance(circuit_unitary(fused), circuit_unitary(c)) < 1e-7);
  }
}
