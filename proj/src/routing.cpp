#include "qbench/routing.hpp"

#include <algorithm>
#include <queue>

#include "qbench/errors.hpp"

namespace qbench {

namespace {

// shortest path between physical qubits, BFS with ascending neighbours
std::vector<int> shortest_path(const UndirectedGraph& g, int from, int to) {
  std::vector<int> parent(static_cast<std::size_t>(g.n_vertices()), -1);
  std::vector<bool> visited(static_cast<std::size_t>(g.n_vertices()), false);
  std::queue<int> q;
  q.push(from);
  visited[static_cast<std::size_t>(from)] = true;
  while (!q.empty()) {
    const int v = q.front();
    q.pop();
    if (v == to) break;
    for (int w : g.neighbours(v)) {
      if (!visited[static_cast<std::size_t>(w)]) {
        visited[static_cast<std::size_t>(w)] = true;
        parent[static_cast<std::size_t>(w)] = v;
        q.push(w);
      }
    }
  }
  std::vector<int> path{to};
  while (path.back() != from) path.push_back(parent[static_cast<std::size_t>(path.back())]);
  std::reverse(path.begin(), path.end());
  return path;
}

void emit_cx(Circuit& out, const CouplingMap& map, int control, int target) {
  const auto c = static_cast<std::uint32_t>(control);
  const auto t = static_cast<std::uint32_t>(target);
  if (map.has_directed(control, target)) {
    out.add(Gate::cx(c, t));
    return;
  }
  // reversed edge only: conjugate with H on both qubits
  out.add(Gate::h(c));
  out.add(Gate::h(t));
  out.add(Gate::cx(t, c));
  out.add(Gate::h(c));
  out.add(Gate::h(t));
}

void emit_swap(Circuit& out, const CouplingMap& map, int a, int b) {
  emit_cx(out, map, a, b);
  emit_cx(out, map, b, a);
  emit_cx(out, map, a, b);
}

}  // namespace

RoutedCircuit route(const Circuit& circuit, const CouplingMap& map,
                    const Placement& placement) {
  const int n = circuit.n_qubits();
  placement.validate(n, map.n_qubits);
  const UndirectedGraph g = map.skeleton();

  // current virtual -> physical map, mutated by SWAPs
  std::vector<int> v2p = placement.virtual_to_physical;
  std::vector<int> p2v(static_cast<std::size_t>(map.n_qubits), -1);
  for (int vq = 0; vq < n; ++vq)
    p2v[static_cast<std::size_t>(v2p[static_cast<std::size_t>(vq)])] = vq;

  auto swap_physical = [&](int pa, int pb) {
    const int va = p2v[static_cast<std::size_t>(pa)];
    const int vb = p2v[static_cast<std::size_t>(pb)];
    std::swap(p2v[static_cast<std::size_t>(pa)], p2v[static_cast<std::size_t>(pb)]);
    if (va >= 0) v2p[static_cast<std::size_t>(va)] = pb;
    if (vb >= 0) v2p[static_cast<std::size_t>(vb)] = pa;
  };

  RoutedCircuit result{Circuit(map.n_qubits, circuit.measure_all()),
                       placement, placement, 0};
  Circuit& out = result.circuit;

  for (const Gate& gate : circuit.gates()) {
    if (gate.arity() == 1) {
      Gate moved = gate;
      moved.qubits[0] = static_cast<std::uint32_t>(
          v2p[static_cast<std::size_t>(gate.qubits[0])]);
      out.add(moved);
      continue;
    }
    const int u = static_cast<int>(gate.qubits[0]);
    const int v = static_cast<int>(gate.qubits[1]);
    if (!g.has_edge(v2p[static_cast<std::size_t>(u)],
                    v2p[static_cast<std::size_t>(v)])) {
      const auto path = shortest_path(g, v2p[static_cast<std::size_t>(u)],
                                      v2p[static_cast<std::size_t>(v)]);
      // walk u's state along the path until adjacent to v
      for (std::size_t i = 0; i + 2 < path.size(); ++i) {
        emit_swap(out, map, path[i], path[i + 1]);
        swap_physical(path[i], path[i + 1]);
        ++result.swap_count;
      }
    }
    const int pu = v2p[static_cast<std::size_t>(u)];
    const int pv = v2p[static_cast<std::size_t>(v)];
    if (gate.kind == GateKind::CX) {
      emit_cx(out, map, pu, pv);
    } else if (gate.kind == GateKind::SWAP) {
      emit_swap(out, map, pu, pv);
    } else {
      Gate moved = gate;
      moved.qubits[0] = static_cast<std::uint32_t>(pu);
      moved.qubits[1] = static_cast<std::uint32_t>(pv);
      out.add(moved);
    }
  }

  result.final_map.virtual_to_physical = v2p;
  return result;
}

Circuit fix_cx_directions(const Circuit& circuit, const CouplingMap& map) {
  Circuit out(circuit.n_qubits(), circuit.measure_all());
  for (const Gate& g : circuit.gates()) {
    if (g.kind == GateKind::CX) {
      emit_cx(out, map, static_cast<int>(g.qubits[0]),
              static_cast<int>(g.qubits[1]));
    } else {
      out.add(g);
    }
  }
  return out;
}

bool conforms_to_map(const Circuit& circuit, const CouplingMap& map) {
  for (const Gate& g : circuit.gates()) {
    if (g.arity() != 2) continue;
    if (!map.has_undirected(static_cast<int>(g.qubits[0]),
                            static_cast<int>(g.qubits[1])))
      return false;
    if (g.kind == GateKind::CX &&
        !map.has_directed(static_cast<int>(g.qubits[0]),
                          static_cast<int>(g.qubits[1])))
      return false;
  }
  return true;
}

}  // namespace qbench
