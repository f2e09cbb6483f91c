#include "qbench/unitary.hpp"

#include <cmath>

#include "qbench/errors.hpp"

namespace qbench {

namespace {
constexpr std::complex<double> kI{0.0, 1.0};
const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

Matrix2cd u3_matrix(double theta, double phi, double lambda) {
  const double c = std::cos(theta / 2);
  const double s = std::sin(theta / 2);
  Matrix2cd m;
  m << c, -std::exp(kI * lambda) * s,
       std::exp(kI * phi) * s, std::exp(kI * (lambda + phi)) * c;
  return m;
}
}  // namespace

Matrix2cd gate_matrix_1q(const Gate& gate) {
  Matrix2cd m;
  switch (gate.kind) {
    case GateKind::H:
      m << kInvSqrt2, kInvSqrt2, kInvSqrt2, -kInvSqrt2;
      return m;
    case GateKind::X:
      m << 0, 1, 1, 0;
      return m;
    case GateKind::Y:
      m << 0, -kI, kI, 0;
      return m;
    case GateKind::Z:
      m << 1, 0, 0, -1;
      return m;
    case GateKind::RX: {
      const double a = gate.params[0];
      m << std::cos(a / 2), -kI * std::sin(a / 2),
           -kI * std::sin(a / 2), std::cos(a / 2);
      return m;
    }
    case GateKind::RZ: {
      const double a = gate.params[0];
      m << std::exp(-kI * (a / 2)), 0, 0, std::exp(kI * (a / 2));
      return m;
    }
    case GateKind::U1:
      return u3_matrix(0.0, 0.0, gate.params[0]);
    case GateKind::U2:
      return u3_matrix(M_PI / 2, gate.params[0], gate.params[1]);
    case GateKind::U3:
      return u3_matrix(gate.params[0], gate.params[1], gate.params[2]);
    default:
      throw GateError("gate_matrix_1q: not a single-qubit gate");
  }
}

Matrix4cd gate_matrix_2q(const Gate& gate) {
  Matrix4cd m = Matrix4cd::Zero();
  switch (gate.kind) {
    case GateKind::CX:
      m(0, 0) = 1; m(1, 1) = 1; m(2, 3) = 1; m(3, 2) = 1;
      return m;
    case GateKind::CZ:
      m(0, 0) = 1; m(1, 1) = 1; m(2, 2) = 1; m(3, 3) = -1;
      return m;
    case GateKind::SWAP:
      m(0, 0) = 1; m(1, 2) = 1; m(2, 1) = 1; m(3, 3) = 1;
      return m;
    case GateKind::SU4:
      for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) m(i, j) = (*gate.matrix)[i * 4 + j];
      return m;
    default:
      throw GateError("gate_matrix_2q: not a two-qubit gate");
  }
}

MatrixXcd circuit_unitary(const Circuit& circuit) {
  const int n = circuit.n_qubits();
  if (n > 12) throw WidthError("circuit_unitary: width capped at 12 qubits");
  const std::size_t dim = std::size_t{1} << n;
  MatrixXcd u = MatrixXcd::Identity(static_cast<Eigen::Index>(dim),
                                    static_cast<Eigen::Index>(dim));
  // Apply each gate column-wise via strided index updates.
  for (const Gate& g : circuit.gates()) {
    if (g.arity() == 1) {
      const Matrix2cd m = gate_matrix_1q(g);
      const std::size_t stride = std::size_t{1} << (n - 1 - static_cast<int>(g.qubits[0]));
      for (std::size_t col = 0; col < dim; ++col) {
        for (std::size_t base = 0; base < dim; ++base) {
          if (base & stride) continue;
          const auto i0 = static_cast<Eigen::Index>(base);
          const auto i1 = static_cast<Eigen::Index>(base | stride);
          const auto c = static_cast<Eigen::Index>(col);
          const std::complex<double> a0 = u(i0, c);
          const std::complex<double> a1 = u(i1, c);
          u(i0, c) = m(0, 0) * a0 + m(0, 1) * a1;
          u(i1, c) = m(1, 0) * a0 + m(1, 1) * a1;
        }
      }
    } else {
      const Matrix4cd m = gate_matrix_2q(g);
      const std::size_t s0 = std::size_t{1} << (n - 1 - static_cast<int>(g.qubits[0]));
      const std::size_t s1 = std::size_t{1} << (n - 1 - static_cast<int>(g.qubits[1]));
      for (std::size_t col = 0; col < dim; ++col) {
        for (std::size_t base = 0; base < dim; ++base) {
          if ((base & s0) || (base & s1)) continue;
          const auto c = static_cast<Eigen::Index>(col);
          Eigen::Index idx[4] = {
              static_cast<Eigen::Index>(base),
              static_cast<Eigen::Index>(base | s1),
              static_cast<Eigen::Index>(base | s0),
              static_cast<Eigen::Index>(base | s0 | s1)};
          std::complex<double> amp[4];
          for (int k = 0; k < 4; ++k) amp[k] = u(idx[k], c);
          for (int r = 0; r < 4; ++r) {
            std::complex<double> acc = 0.0;
            for (int k = 0; k < 4; ++k) acc += m(r, k) * amp[k];
            u(idx[r], c) = acc;
          }
        }
      }
    }
  }
  return u;
}

double phase_distance(const MatrixXcd& a, const MatrixXcd& b) {
  Eigen::Index bi = 0, bj = 0;
  b.cwiseAbs().maxCoeff(&bi, &bj);
  if (std::abs(b(bi, bj)) < 1e-14) return (a - b).cwiseAbs().maxCoeff();
  const std::complex<double> phase = a(bi, bj) / b(bi, bj);
  return (a - phase * b).cwiseAbs().maxCoeff();
}

bool is_unitary(const MatrixXcd& u, double tol) {
  const MatrixXcd prod = u.adjoint() * u;
  const MatrixXcd eye = MatrixXcd::Identity(u.rows(), u.cols());
  return (prod - eye).cwiseAbs().maxCoeff() <= tol;
}

}  // namespace qbench
