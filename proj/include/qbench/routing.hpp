#pragma once

#include "qbench/circuit.hpp"
#include "qbench/device.hpp"
#include "qbench/placement.hpp"

namespace qbench {

/// Routed circuit on device width plus the final virtual-to-physical map
/// (routing SWAPs move virtual qubits, so it differs from the initial
/// placement).  Measurement bit i of the virtual frame lives at physical
/// qubit final_map.physical(i).
struct RoutedCircuit {
  Circuit circuit;
  Placement initial;
  Placement final_map;
  int swap_count = 0;
};

/// Insert SWAPs along shortest paths until every two-qubit gate acts on a
/// coupling-map edge.  SWAPs are emitted as 3 CX; CX gates that oppose a
/// directed edge are rewritten with 4 H.
RoutedCircuit route(const Circuit& circuit, const CouplingMap& map,
                    const Placement& placement);

/// Rewrite wrong-direction CX gates with H conjugation (no-op on maps with
/// bidirectional edges).  Leaves other gates untouched.
Circuit fix_cx_directions(const Circuit& circuit, const CouplingMap& map);

/// True when every two-qubit interaction lies on the undirected skeleton.
bool conforms_to_map(const Circuit& circuit, const CouplingMap& map);

}  // namespace qbench
