#pragma once

#include <Eigen/Dense>
#include <complex>

#include "qbench/circuit.hpp"

namespace qbench {

using Matrix2cd = Eigen::Matrix2cd;
using Matrix4cd = Eigen::Matrix4cd;
using MatrixXcd = Eigen::MatrixXcd;

/// 2x2 matrix of a single-qubit gate.
Matrix2cd gate_matrix_1q(const Gate& gate);

/// 4x4 matrix of a two-qubit gate in the basis |q_first q_second> with the
/// gate's first qubit as the more significant bit.
Matrix4cd gate_matrix_2q(const Gate& gate);

/// Dense unitary of the whole circuit (qubit 0 = most significant bit),
/// measurement ignored.  Guarded to n_qubits <= 12.
MatrixXcd circuit_unitary(const Circuit& circuit);

/// Max entrywise deviation of a from phase * b, minimised over the global
/// phase (taken from the largest-magnitude entry of b).
double phase_distance(const MatrixXcd& a, const MatrixXcd& b);

/// True when u is unitary within tol (entrywise U^dag U vs I).
bool is_unitary(const MatrixXcd& u, double tol);

}  // namespace qbench
