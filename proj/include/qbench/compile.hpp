#pragma once

#include <string>
#include <vector>

#include "qbench/circuit.hpp"
#include "qbench/device.hpp"
#include "qbench/placement.hpp"
#include "qbench/routing.hpp"

namespace qbench {

/// Placement flavour of the compile pipeline.  RoutingOnly keeps the
/// trivial placement and skips the optimisation pass; the other two add
/// single-qubit gate fusion.
enum class Strategy { RoutingOnly, LineUnaware, NoiseAware };

const char* strategy_name(Strategy s);
Strategy strategy_from_name(const std::string& name);

struct CompileResult {
  Circuit circuit;       // native gates on device width, map-conforming
  Placement placement;   // initial virtual -> physical
  Placement final_map;   // after routing SWAPs
  int swap_count = 0;
};

/// placement -> route -> rebase -> CX direction fix -> (fusion).
CompileResult compile(const Circuit& circuit, const DeviceModel& device,
                      Strategy strategy,
                      const PlacementWeights& weights = {});

/// Compiled circuit restricted to the qubits it actually uses (gates plus
/// the image of the final map), relabelled compactly.  used[i] is the
/// physical qubit behind compact index i.
struct RestrictedCircuit {
  Circuit circuit;
  std::vector<int> used;

  int compact_index(int physical) const;
};

RestrictedCircuit restrict_to_used(const Circuit& circuit,
                                   const Placement& final_map);

/// Max deviation of the compiled circuit from `permute . original` over
/// the embedded computational subspace, minimised over one global phase:
/// for every basis state |x> of the original width, the compiled circuit
/// applied to |placement(x)> must give the permuted original column.
double compiled_deviation(const Circuit& original, const CompileResult& result);

/// compiled_deviation <= tol (default matches the compile contract).
bool verify_compiled(const Circuit& original, const CompileResult& result,
                     double tol = 1e-7);

}  // namespace qbench
