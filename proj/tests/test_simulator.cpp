#include <cmath>

#include "doctest.h"
#include "qbench/errors.hpp"
#include "qbench/generators.hpp"
#include "qbench/statevector.hpp"
#include "qbench/unitary.hpp"

using namespace qbench;

TEST_CASE("hadamard superposition") {
  Circuit c(1);
  c.add(Gate::h(0));
  const StateVector s = statevector(c);
  const double inv = 1.0 / std::sqrt(2.0);
  CHECK(std::abs(s[0] - inv) < 1e-15);
  CHECK(std::abs(s[1] - inv) < 1e-15);
}

TEST_CASE("bell state amplitudes") {
  Circuit c(2);
  c.add(Gate::h(0));
  c.add(Gate::cx(0, 1));
  const StateVector s = statevector(c);
  const double inv = 1.0 / std::sqrt(2.0);
  CHECK(std::abs(s[0] - inv) < 1e-15);
  CHECK(std::abs(s[1]) < 1e-15);
  CHECK(std::abs(s[2]) < 1e-15);
  CHECK(std::abs(s[3] - inv) < 1e-15);
}

TEST_CASE("empty two-qubit circuit is a point mass") {
  const ProbabilityTable t = output_probabilities(Circuit(2));
  CHECK(t.probs[0] == 1.0);
  CHECK(t.probs[1] == 0.0);
  CHECK(t.probs[2] == 0.0);
  CHECK(t.probs[3] == 0.0);
}

TEST_CASE("single-qubit h gives a fair coin") {
  Circuit c(1);
  c.add(Gate::h(0));
  const ProbabilityTable t = output_probabilities(c);
  CHECK(std::abs(t.probs[0] - 0.5) < 1e-15);
  CHECK(std::abs(t.probs[1] - 0.5) < 1e-15);
}

TEST_CASE("zz gadget at full period acts as the identity") {
  Circuit c(2);
  c.add(Gate::h(0));  // non-trivial input state
  c.add(Gate::h(1));
  Circuit ref = c;
  constexpr double two_pi = 6.283185307179586;
  c.add(pauli_gadget(two_pi, PauliString::parse("ZZ")));
  const StateVector got = statevector(c);
  const StateVector want = statevector(ref);
  // equal up to global phase
  std::complex<double> phase = 0.0;
  for (std::size_t i = 0; i < got.dim(); ++i)
    if (std::abs(want[i]) > 0.3) {
      phase = got[i] / want[i];
      break;
    }
  for (std::size_t i = 0; i < got.dim(); ++i)
    CHECK(std::abs(got[i] - phase * want[i]) < 1e-9);
}

TEST_CASE("gate application agrees with the dense oracle") {
  Rng rng(31);
  for (int trial = 0; trial < 10; ++trial) {
    const int n = 2 + static_cast<int>(rng.uniform_int(4));
    Rng gen_rng(rng.next_u64());
    const Circuit c = gen_square(n, gen_rng);
    const ProbabilityTable t = output_probabilities(c);
    const MatrixXcd u = circuit_unitary(c);
    for (std::size_t x = 0; x < t.dim(); ++x) {
      const double oracle = std::norm(u(static_cast<Eigen::Index>(x), 0));
      CHECK(std::abs(t.probs[x] - oracle) < 1e-8);
    }
  }
}

TEST_CASE("probabilities sum to one across classes") {
  Rng rng(37);
  for (CircuitClass cls :
       {CircuitClass::Shallow, CircuitClass::Square, CircuitClass::Deep}) {
    for (int n = 2; n <= 6; ++n) {
      Rng gen_rng(rng.next_u64());
      const ProbabilityTable t =
          output_probabilities(generate(cls, n, gen_rng));
      CHECK(std::abs(t.total() - 1.0) < 1e-9);
    }
  }
}

TEST_CASE("statevector width guard") {
  CHECK_THROWS_AS(StateVector(21), WidthError);
}

TEST_CASE("swap gate moves amplitudes") {
  Circuit c(2);
  c.add(Gate::x(0));       // |10>
  c.add(Gate::swap(0, 1)); // |01>
  const StateVector s = statevector(c);
  CHECK(std::abs(s[1] - 1.0) < 1e-15);
}
