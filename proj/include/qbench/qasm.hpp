#pragma once

#include <string>

#include "qbench/circuit.hpp"

namespace qbench {

/// OpenQASM 2.0 text: qelib1 header, one quantum and one classical
/// register, gates in order, terminal measure statements when the circuit
/// measures.  Angles printed with 17 significant digits.  Raw SU4 gates
/// are rejected (rebase first).
std::string export_qasm(const Circuit& circuit);

/// Minimal reader for the exporter's own dialect; round-trips the gate
/// list exactly.
Circuit parse_qasm(const std::string& text);

}  // namespace qbench
