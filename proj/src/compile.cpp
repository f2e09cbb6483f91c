#include "qbench/compile.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "qbench/errors.hpp"
#include "qbench/rebase.hpp"
#include "qbench/statevector.hpp"

namespace qbench {

const char* strategy_name(Strategy s) {
  switch (s) {
    case Strategy::RoutingOnly: return "routing_only";
    case Strategy::LineUnaware: return "line_unaware";
    case Strategy::NoiseAware: return "noise_aware";
  }
  return "?";
}

Strategy strategy_from_name(const std::string& name) {
  if (name == "routing_only") return Strategy::RoutingOnly;
  if (name == "line_unaware") return Strategy::LineUnaware;
  if (name == "noise_aware") return Strategy::NoiseAware;
  throw InputError("unknown strategy: " + name);
}

CompileResult compile(const Circuit& circuit, const DeviceModel& device,
                      Strategy strategy, const PlacementWeights& weights) {
  if (circuit.n_qubits() > device.coupling.n_qubits)
    throw WidthError("compile: circuit wider than device");

  Placement placement;
  switch (strategy) {
    case Strategy::RoutingOnly:
      placement = Placement::identity(circuit.n_qubits());
      break;
    case Strategy::LineUnaware:
      placement = line_placement(circuit, device.coupling);
      break;
    case Strategy::NoiseAware:
      placement = noise_aware_placement(circuit, device.coupling,
                                        device.calibration, weights);
      break;
  }

  RoutedCircuit routed = route(circuit, device.coupling, placement);
  Circuit native = rebase(routed.circuit);
  native = fix_cx_directions(native, device.coupling);
  if (strategy != Strategy::RoutingOnly)
    native = fuse_single_qubit_gates(native);

  return CompileResult{std::move(native), routed.initial, routed.final_map,
                       routed.swap_count};
}

int RestrictedCircuit::compact_index(int physical) const {
  const auto it = std::lower_bound(used.begin(), used.end(), physical);
  if (it == used.end() || *it != physical)
    throw InputError("physical qubit not in restricted circuit");
  return static_cast<int>(std::distance(used.begin(), it));
}

RestrictedCircuit restrict_to_used(const Circuit& circuit,
                                   const Placement& final_map) {
  std::set<int> touched;
  for (const Gate& g : circuit.gates()) {
    touched.insert(static_cast<int>(g.qubits[0]));
    if (g.arity() == 2) touched.insert(static_cast<int>(g.qubits[1]));
  }
  for (int p : final_map.virtual_to_physical) touched.insert(p);

  RestrictedCircuit out{Circuit(static_cast<int>(touched.size()),
                                circuit.measure_all()),
                        {touched.begin(), touched.end()}};
  for (const Gate& g : circuit.gates()) {
    Gate moved = g;
    moved.qubits[0] =
        static_cast<std::uint32_t>(out.compact_index(static_cast<int>(g.qubits[0])));
    if (g.arity() == 2)
      moved.qubits[1] = static_cast<std::uint32_t>(
          out.compact_index(static_cast<int>(g.qubits[1])));
    out.circuit.add(moved);
  }
  return out;
}

double compiled_deviation(const Circuit& original,
                          const CompileResult& result) {
  const int n = original.n_qubits();
  if (n > 12)
    throw WidthError("compiled_deviation: original width capped at 12");
  const RestrictedCircuit restricted =
      restrict_to_used(result.circuit, result.final_map);
  const int m = restricted.circuit.n_qubits();
  if (m > 20) throw WidthError("compiled_deviation: too many used qubits");

  // compact positions of each virtual qubit before and after routing
  std::vector<int> in_pos(static_cast<std::size_t>(n));
  std::vector<int> out_pos(static_cast<std::size_t>(n));
  for (int vq = 0; vq < n; ++vq) {
    in_pos[static_cast<std::size_t>(vq)] =
        restricted.compact_index(result.placement.physical(vq));
    out_pos[static_cast<std::size_t>(vq)] =
        restricted.compact_index(result.final_map.physical(vq));
  }

  const std::size_t dim_in = std::size_t{1} << n;
  const std::size_t dim_out = std::size_t{1} << m;
  std::complex<double> phase = 0.0;
  double worst = 0.0;

  for (std::size_t x = 0; x < dim_in; ++x) {
    // reference column: original on |x>
    StateVector ref(n);
    ref[0] = 0.0;
    ref[x] = 1.0;
    for (const Gate& g : original.gates()) ref.apply(g);

    // compiled on the embedded basis state
    std::size_t embedded = 0;
    for (int vq = 0; vq < n; ++vq) {
      if (x >> (n - 1 - vq) & 1)
        embedded |= std::size_t{1} << (m - 1 - in_pos[static_cast<std::size_t>(vq)]);
    }
    StateVector got(m);
    got[0] = 0.0;
    got[embedded] = 1.0;
    for (const Gate& g : restricted.circuit.gates()) got.apply(g);

    // compare: got[y_embedded] must equal phase * ref[y] and every
    // amplitude outside the embedded subspace must vanish
    std::vector<std::complex<double>> expected(dim_out, 0.0);
    for (std::size_t y = 0; y < ref.dim(); ++y) {
      std::size_t target = 0;
      for (int vq = 0; vq < n; ++vq) {
        if (y >> (n - 1 - vq) & 1)
          target |= std::size_t{1}
                    << (m - 1 - out_pos[static_cast<std::size_t>(vq)]);
      }
      expected[target] = ref[y];
    }
    if (phase == std::complex<double>(0.0)) {
      // one global phase for all columns, taken from the largest
      // amplitude of the first column
      std::size_t best = 0;
      for (std::size_t y = 1; y < dim_out; ++y)
        if (std::abs(expected[y]) > std::abs(expected[best])) best = y;
      phase = got[best] / expected[best];
    }
    for (std::size_t y = 0; y < dim_out; ++y)
      worst = std::max(worst, std::abs(got[y] - phase * expected[y]));
  }
  return worst;
}

bool verify_compiled(const Circuit& original, const CompileResult& result,
                     double tol) {
  return compiled_deviation(original, result) <= tol;
}

}  // namespace qbench
