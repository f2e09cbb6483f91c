#pragma once

#include "qbench/circuit.hpp"

namespace qbench {

/// Rewrite to the native set {U1, U2, U3, CX}: H -> U2(0, pi),
/// RZ(a) -> U1(a), RX(a) -> U3(a, -pi/2, pi/2), CZ -> H-conjugated CX,
/// SWAP -> 3 CX, SU4 -> KAK decomposition.  Unitary preserved up to
/// global phase.
Circuit rebase(const Circuit& circuit);

/// True when the circuit only contains U1/U2/U3/CX.
bool is_native(const Circuit& circuit);

/// Merge maximal runs of single-qubit gates into one U3 each (global
/// phase dropped).  Two-qubit gate order is untouched.
Circuit fuse_single_qubit_gates(const Circuit& circuit);

}  // namespace qbench
