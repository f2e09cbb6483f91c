#include "qbench/rebase.hpp"

#include <cmath>
#include <vector>

#include "qbench/errors.hpp"
#include "qbench/kak.hpp"
#include "qbench/unitary.hpp"

namespace qbench {

namespace {
constexpr double kPi = 3.14159265358979323846;
constexpr double kHalfPi = kPi / 2;

void rebase_into(const Gate& g, Circuit& out);

void emit_h(Circuit& out, std::uint32_t q) { out.add(Gate::u2(q, 0.0, kPi)); }

void emit_su4(const Gate& g, Circuit& out) {
  Matrix4cd u;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) u(i, j) = (*g.matrix)[i * 4 + j];
  for (const Gate& part : kak_decompose(u)) {
    Gate moved = part;
    moved.qubits[0] = g.qubits[moved.qubits[0]];
    if (moved.arity() == 2) moved.qubits[1] = g.qubits[moved.qubits[1]];
    rebase_into(moved, out);
  }
}

void rebase_into(const Gate& g, Circuit& out) {
  const std::uint32_t q0 = g.qubits[0];
  const std::uint32_t q1 = g.qubits[1];
  switch (g.kind) {
    case GateKind::U1:
    case GateKind::U2:
    case GateKind::U3:
    case GateKind::CX:
      out.add(g);
      return;
    case GateKind::H:
      emit_h(out, q0);
      return;
    case GateKind::X:
      out.add(Gate::u3(q0, kPi, 0.0, kPi));
      return;
    case GateKind::Y:
      out.add(Gate::u3(q0, kPi, kHalfPi, kHalfPi));
      return;
    case GateKind::Z:
      out.add(Gate::u1(q0, kPi));
      return;
    case GateKind::RZ:
      out.add(Gate::u1(q0, g.params[0]));
      return;
    case GateKind::RX:
      out.add(Gate::u3(q0, g.params[0], -kHalfPi, kHalfPi));
      return;
    case GateKind::CZ:
      emit_h(out, q1);
      out.add(Gate::cx(q0, q1));
      emit_h(out, q1);
      return;
    case GateKind::SWAP:
      out.add(Gate::cx(q0, q1));
      out.add(Gate::cx(q1, q0));
      out.add(Gate::cx(q0, q1));
      return;
    case GateKind::SU4:
      emit_su4(g, out);
      return;
  }
  throw GateError(std::string("rebase: unknown gate '") + kind_name(g.kind) +
                  "'");
}
}  // namespace

Circuit rebase(const Circuit& circuit) {
  Circuit out(circuit.n_qubits(), circuit.measure_all());
  for (const Gate& g : circuit.gates()) rebase_into(g, out);
  return out;
}

bool is_native(const Circuit& circuit) {
  for (const Gate& g : circuit.gates()) {
    switch (g.kind) {
      case GateKind::U1:
      case GateKind::U2:
      case GateKind::U3:
      case GateKind::CX:
        break;
      default:
        return false;
    }
  }
  return true;
}

Circuit fuse_single_qubit_gates(const Circuit& circuit) {
  const int n = circuit.n_qubits();
  Circuit out(n, circuit.measure_all());
  // pending accumulated 2x2 per qubit
  std::vector<Matrix2cd> pending(static_cast<std::size_t>(n));
  std::vector<bool> has_pending(static_cast<std::size_t>(n), false);

  auto flush = [&](std::uint32_t q) {
    if (!has_pending[q]) return;
    const Matrix2cd& m = pending[q];
    // skip identity (mod phase)
    const std::complex<double> scale = m(0, 0);
    const bool identity = std::abs(m(0, 1)) < 1e-12 &&
                          std::abs(m(1, 0)) < 1e-12 &&
                          std::abs(std::abs(scale) - 1.0) < 1e-12 &&
                          std::abs(m(1, 1) - scale) < 1e-12;
    if (!identity) {
      const auto [theta, phi, lambda] = zyz_angles(m);
      out.add(Gate::u3(q, theta, phi, lambda));
    }
    has_pending[q] = false;
  };

  for (const Gate& g : circuit.gates()) {
    if (g.arity() == 1) {
      const std::uint32_t q = g.qubits[0];
      const Matrix2cd m = gate_matrix_1q(g);
      pending[q] = has_pending[q] ? Matrix2cd(m * pending[q]) : m;
      has_pending[q] = true;
    } else {
      flush(g.qubits[0]);
      flush(g.qubits[1]);
      out.add(g);
    }
  }
  for (int q = 0; q < n; ++q) flush(static_cast<std::uint32_t>(q));
  return out;
}

}  // namespace qbench
