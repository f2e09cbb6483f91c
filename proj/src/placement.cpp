#include "qbench/placement.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <queue>
#include <set>

#include "qbench/errors.hpp"

namespace qbench {

Placement Placement::identity(int n) {
  Placement p;
  p.virtual_to_physical.resize(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) p.virtual_to_physical[static_cast<std::size_t>(i)] = i;
  return p;
}

void Placement::validate(int n_virtual, int n_physical) const {
  if (static_cast<int>(virtual_to_physical.size()) != n_virtual)
    throw InputError("placement size does not match circuit width");
  std::vector<bool> seen(static_cast<std::size_t>(n_physical), false);
  for (int p : virtual_to_physical) {
    if (p < 0 || p >= n_physical)
      throw WidthError("placement target outside device");
    if (seen[static_cast<std::size_t>(p)])
      throw InputError("placement is not injective");
    seen[static_cast<std::size_t>(p)] = true;
  }
}

namespace {

struct Interactions {
  // ordered distinct (u, v) pairs by first occurrence
  std::vector<std::pair<int, int>> ordered;
  // per-virtual first interaction gate index (INT_MAX when none)
  std::vector<int> first_time;
  // per unordered pair, number of occurrences
  std::map<std::pair<int, int>, int> pair_count;
  // per-virtual single-qubit gate count
  std::vector<int> gates_1q;

  explicit Interactions(const Circuit& c)
      : first_time(static_cast<std::size_t>(c.n_qubits()),
                   std::numeric_limits<int>::max()),
        gates_1q(static_cast<std::size_t>(c.n_qubits()), 0) {
    std::set<std::pair<int, int>> seen;
    int t = 0;
    for (const Gate& g : c.gates()) {
      if (g.arity() == 2) {
        const int u = static_cast<int>(g.qubits[0]);
        const int v = static_cast<int>(g.qubits[1]);
        first_time[static_cast<std::size_t>(u)] =
            std::min(first_time[static_cast<std::size_t>(u)], t);
        first_time[static_cast<std::size_t>(v)] =
            std::min(first_time[static_cast<std::size_t>(v)], t);
        const auto key = std::minmax(u, v);
        ++pair_count[{key.first, key.second}];
        if (seen.insert({key.first, key.second}).second)
          ordered.emplace_back(u, v);
      } else {
        ++gates_1q[g.qubits[0]];
      }
      ++t;
    }
  }
};

// nearest free physical qubit to `from` (BFS, ascending neighbours)
int nearest_free(const UndirectedGraph& g, int from,
                 const std::vector<bool>& used) {
  std::vector<bool> visited(static_cast<std::size_t>(g.n_vertices()), false);
  std::queue<int> q;
  q.push(from);
  visited[static_cast<std::size_t>(from)] = true;
  while (!q.empty()) {
    const int v = q.front();
    q.pop();
    if (!used[static_cast<std::size_t>(v)]) return v;
    for (int w : g.neighbours(v)) {
      if (!visited[static_cast<std::size_t>(w)]) {
        visited[static_cast<std::size_t>(w)] = true;
        q.push(w);
      }
    }
  }
  return -1;
}

}  // namespace

Placement line_placement(const Circuit& circuit, const CouplingMap& map) {
  const int n = circuit.n_qubits();
  if (n > map.n_qubits)
    throw WidthError("line_placement: circuit wider than device");
  const UndirectedGraph g = map.skeleton();
  const Interactions info(circuit);

  std::vector<int> v2p(static_cast<std::size_t>(n), -1);
  std::vector<bool> used(static_cast<std::size_t>(map.n_qubits), false);
  auto place = [&](int vq, int pq) {
    v2p[static_cast<std::size_t>(vq)] = pq;
    used[static_cast<std::size_t>(pq)] = true;
  };

  for (const auto& [u, v] : info.ordered) {
    const bool pu = v2p[static_cast<std::size_t>(u)] >= 0;
    const bool pv = v2p[static_cast<std::size_t>(v)] >= 0;
    if (pu && pv) continue;
    if (!pu && !pv) {
      // find a free vertex with a free neighbour, walking from qubit 0
      int a = -1, b = -1;
      for (int cand = 0; cand < g.n_vertices() && a < 0; ++cand) {
        if (used[static_cast<std::size_t>(cand)]) continue;
        for (int w : g.neighbours(cand)) {
          if (!used[static_cast<std::size_t>(w)]) {
            a = cand;
            b = w;
            break;
          }
        }
      }
      if (a < 0) {
        // no free edge left: fall back to nearest free vertices
        a = nearest_free(g, 0, used);
        place(u, a);
        place(v, nearest_free(g, a, used));
        continue;
      }
      place(u, a);
      place(v, b);
    } else {
      const int anchor = pu ? v2p[static_cast<std::size_t>(u)]
                            : v2p[static_cast<std::size_t>(v)];
      const int other = pu ? v : u;
      place(other, nearest_free(g, anchor, used));
    }
  }

  // leftover virtual qubits: first-interaction order, then index
  std::vector<int> rest;
  for (int q = 0; q < n; ++q)
    if (v2p[static_cast<std::size_t>(q)] < 0) rest.push_back(q);
  std::stable_sort(rest.begin(), rest.end(), [&](int a, int b) {
    return info.first_time[static_cast<std::size_t>(a)] <
           info.first_time[static_cast<std::size_t>(b)];
  });
  for (int q : rest) {
    int anchor = -1;
    for (int p = 0; p < map.n_qubits; ++p)
      if (used[static_cast<std::size_t>(p)]) {
        anchor = p;
        break;
      }
    place(q, nearest_free(g, anchor < 0 ? 0 : anchor, used));
  }

  Placement out{std::move(v2p)};
  out.validate(n, map.n_qubits);
  return out;
}

Placement noise_aware_placement(const Circuit& circuit, const CouplingMap& map,
                                const CalibrationData& cal,
                                const PlacementWeights& weights) {
  const int n = circuit.n_qubits();
  const int np = map.n_qubits;
  if (n > np) throw WidthError("noise_aware_placement: circuit wider than device");
  cal.validate(np);
  const UndirectedGraph g = map.skeleton();
  const Interactions info(circuit);

  // all-pairs shortest-path error distance (Dijkstra per source); a tiny
  // per-hop term keeps locality when calibration is flat or zero
  constexpr double kHop = 1e-9;
  std::vector<std::vector<double>> errdist(
      static_cast<std::size_t>(np),
      std::vector<double>(static_cast<std::size_t>(np),
                          std::numeric_limits<double>::infinity()));
  for (int src = 0; src < np; ++src) {
    auto& dist = errdist[static_cast<std::size_t>(src)];
    dist[static_cast<std::size_t>(src)] = 0.0;
    using Item = std::pair<double, int>;
    std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
    heap.push({0.0, src});
    while (!heap.empty()) {
      const auto [d, v] = heap.top();
      heap.pop();
      if (d > dist[static_cast<std::size_t>(v)]) continue;
      for (int w : g.neighbours(v)) {
        const double nd = d + cal.two_qubit_error(v, w) + kHop;
        if (nd < dist[static_cast<std::size_t>(w)]) {
          dist[static_cast<std::size_t>(w)] = nd;
          heap.push({nd, w});
        }
      }
    }
  }

  // virtual qubits by total interaction count, descending
  std::vector<int> order(static_cast<std::size_t>(n));
  std::vector<int> weight(static_cast<std::size_t>(n), 0);
  for (const auto& [pair, count] : info.pair_count) {
    weight[static_cast<std::size_t>(pair.first)] += count;
    weight[static_cast<std::size_t>(pair.second)] += count;
  }
  for (int q = 0; q < n; ++q) order[static_cast<std::size_t>(q)] = q;
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return weight[static_cast<std::size_t>(a)] >
           weight[static_cast<std::size_t>(b)];
  });

  std::vector<int> v2p(static_cast<std::size_t>(n), -1);
  std::vector<bool> used(static_cast<std::size_t>(np), false);
  for (int vq : order) {
    double best = std::numeric_limits<double>::infinity();
    int best_p = -1;
    for (int p = 0; p < np; ++p) {
      if (used[static_cast<std::size_t>(p)]) continue;
      double cost = weights.single_qubit *
                        info.gates_1q[static_cast<std::size_t>(vq)] *
                        cal.single_qubit[static_cast<std::size_t>(p)] +
                    weights.readout * cal.readout[static_cast<std::size_t>(p)];
      for (const auto& [pair, count] : info.pair_count) {
        int other = -1;
        if (pair.first == vq) other = pair.second;
        else if (pair.second == vq) other = pair.first;
        else continue;
        const int op = v2p[static_cast<std::size_t>(other)];
        if (op < 0) continue;
        cost += weights.two_qubit * count *
                errdist[static_cast<std::size_t>(p)][static_cast<std::size_t>(op)];
      }
      if (cost < best - 1e-15) {
        best = cost;
        best_p = p;
      }
    }
    v2p[static_cast<std::size_t>(vq)] = best_p;
    used[static_cast<std::size_t>(best_p)] = true;
  }

  Placement out{std::move(v2p)};
  out.validate(n, np);
  return out;
}

}  // namespace qbench
