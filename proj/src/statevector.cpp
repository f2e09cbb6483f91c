#include "qbench/statevector.hpp"

#include <cmath>
#include <numeric>

#include "qbench/errors.hpp"
#include "qbench/unitary.hpp"

namespace qbench {

StateVector::StateVector(int n_qubits) : n_qubits_(n_qubits) {
  if (n_qubits < 1 || n_qubits > 20)
    throw WidthError("statevector: width must be in [1, 20]");
  amps_.assign(std::size_t{1} << n_qubits, 0.0);
  amps_[0] = 1.0;
}

void StateVector::apply(const Gate& gate) {
  const int n = n_qubits_;
  const std::size_t dim = amps_.size();
  if (gate.arity() == 1) {
    const Matrix2cd m = gate_matrix_1q(gate);
    const std::size_t stride =
        std::size_t{1} << (n - 1 - static_cast<int>(gate.qubits[0]));
    const std::complex<double> m00 = m(0, 0), m01 = m(0, 1), m10 = m(1, 0),
                               m11 = m(1, 1);
    for (std::size_t base = 0; base < dim; ++base) {
      if (base & stride) continue;
      const std::complex<double> a0 = amps_[base];
      const std::complex<double> a1 = amps_[base | stride];
      amps_[base] = m00 * a0 + m01 * a1;
      amps_[base | stride] = m10 * a0 + m11 * a1;
    }
    return;
  }
  const std::size_t s0 =
      std::size_t{1} << (n - 1 - static_cast<int>(gate.qubits[0]));
  const std::size_t s1 =
      std::size_t{1} << (n - 1 - static_cast<int>(gate.qubits[1]));
  if (gate.kind == GateKind::CZ) {
    for (std::size_t i = 0; i < dim; ++i)
      if ((i & s0) && (i & s1)) amps_[i] = -amps_[i];
    return;
  }
  if (gate.kind == GateKind::CX) {
    for (std::size_t i = 0; i < dim; ++i)
      if ((i & s0) && !(i & s1)) std::swap(amps_[i], amps_[i | s1]);
    return;
  }
  if (gate.kind == GateKind::SWAP) {
    // exchange |01> and |10> on the gate's qubit pair
    for (std::size_t i = 0; i < dim; ++i)
      if ((i & s0) && !(i & s1)) std::swap(amps_[i], amps_[(i ^ s0) | s1]);
    return;
  }
  // dense 4x4 block (SU4)
  const Matrix4cd m = gate_matrix_2q(gate);
  for (std::size_t base = 0; base < dim; ++base) {
    if ((base & s0) || (base & s1)) continue;
    const std::size_t idx[4] = {base, base | s1, base | s0, base | s0 | s1};
    std::complex<double> amp[4];
    for (int k = 0; k < 4; ++k) amp[k] = amps_[idx[k]];
    for (int r = 0; r < 4; ++r) {
      std::complex<double> acc = 0.0;
      for (int k = 0; k < 4; ++k) acc += m(r, k) * amp[k];
      amps_[idx[r]] = acc;
    }
  }
}

double StateVector::norm_sq() const {
  double acc = 0.0;
  for (const auto& a : amps_) acc += std::norm(a);
  return acc;
}

double ProbabilityTable::total() const {
  return std::accumulate(probs.begin(), probs.end(), 0.0);
}

ProbabilityTable ProbabilityTable::uniform(int n_qubits) {
  ProbabilityTable t;
  t.n_qubits = n_qubits;
  const std::size_t dim = std::size_t{1} << n_qubits;
  t.probs.assign(dim, 1.0 / static_cast<double>(dim));
  return t;
}

ProbabilityTable ProbabilityTable::point_mass(int n_qubits,
                                              std::uint64_t index) {
  ProbabilityTable t;
  t.n_qubits = n_qubits;
  t.probs.assign(std::size_t{1} << n_qubits, 0.0);
  t.probs.at(index) = 1.0;
  return t;
}

StateVector statevector(const Circuit& circuit) {
  StateVector state(circuit.n_qubits());
  for (const Gate& g : circuit.gates()) state.apply(g);
  return state;
}

ProbabilityTable output_probabilities(const Circuit& circuit) {
  const StateVector state = statevector(circuit);
  ProbabilityTable t;
  t.n_qubits = circuit.n_qubits();
  t.probs.resize(state.dim());
  for (std::size_t i = 0; i < state.dim(); ++i)
    t.probs[i] = std::norm(state[i]);
  return t;
}

}  // namespace qbench
