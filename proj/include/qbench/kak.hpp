#pragma once

#include <vector>

#include "qbench/circuit.hpp"
#include "qbench/unitary.hpp"

namespace qbench {

/// Magic-basis Cartan decomposition of a two-qubit unitary into at most
/// 3 CX gates plus single-qubit U3 gates, on abstract qubits (0, 1) with
/// qubit 0 as the more significant bit.  The composed sequence equals u up
/// to global phase within 1e-7 (measured ~1e-12).  Local unitaries give
/// 0 CX; the CX equivalence class gives 1.
std::vector<Gate> kak_decompose(const Matrix4cd& u);

/// ZYZ angles (theta, phi, lambda) with U3(theta, phi, lambda) equal to v
/// up to global phase.
std::array<double, 3> zyz_angles(const Matrix2cd& v);

/// Split a 4x4 tensor product A = e^{i phi} Va (x) Vb into its factors.
/// Throws GateError when A is not a tensor product within tol.
std::pair<Matrix2cd, Matrix2cd> kron_factor(const Matrix4cd& a,
                                            double tol = 1e-7);

}  // namespace qbench
