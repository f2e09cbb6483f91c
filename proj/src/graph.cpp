#include "qbench/graph.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "qbench/errors.hpp"

namespace qbench {

UndirectedGraph::UndirectedGraph(int n_vertices) : n_(n_vertices) {
  if (n_vertices < 1) throw InputError("graph needs at least one vertex");
  adj_.resize(static_cast<std::size_t>(n_vertices));
}

void UndirectedGraph::add_edge(int u, int v) {
  if (u < 0 || v < 0 || u >= n_ || v >= n_)
    throw InputError("edge endpoint out of range");
  if (u == v) throw InputError("self-loops are not allowed");
  if (has_edge(u, v)) throw InputError("duplicate edge");
  edges_.emplace_back(u, v);
  adj_[static_cast<std::size_t>(u)].push_back(v);
  adj_[static_cast<std::size_t>(v)].push_back(u);
  std::sort(adj_[static_cast<std::size_t>(u)].begin(),
            adj_[static_cast<std::size_t>(u)].end());
  std::sort(adj_[static_cast<std::size_t>(v)].begin(),
            adj_[static_cast<std::size_t>(v)].end());
}

bool UndirectedGraph::has_edge(int u, int v) const {
  const auto& nb = adj_[static_cast<std::size_t>(u)];
  return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<int> UndirectedGraph::degrees() const {
  std::vector<int> d(static_cast<std::size_t>(n_));
  for (int v = 0; v < n_; ++v)
    d[static_cast<std::size_t>(v)] =
        static_cast<int>(adj_[static_cast<std::size_t>(v)].size());
  return d;
}

int UndirectedGraph::max_degree() const {
  int best = 0;
  for (const auto& nb : adj_) best = std::max(best, static_cast<int>(nb.size()));
  return best;
}

std::vector<int> UndirectedGraph::neighbours(int v) const {
  return adj_[static_cast<std::size_t>(v)];
}

std::vector<int> UndirectedGraph::bfs_distances(int source) const {
  std::vector<int> dist(static_cast<std::size_t>(n_), -1);
  std::deque<int> queue{source};
  dist[static_cast<std::size_t>(source)] = 0;
  while (!queue.empty()) {
    const int v = queue.front();
    queue.pop_front();
    for (int w : adj_[static_cast<std::size_t>(v)]) {
      if (dist[static_cast<std::size_t>(w)] < 0) {
        dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(v)] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

bool UndirectedGraph::connected() const {
  const auto dist = bfs_distances(0);
  return std::all_of(dist.begin(), dist.end(), [](int d) { return d >= 0; });
}

namespace {

// Misra-Gries machinery.  Colours are 0..max_degree (inclusive).
struct Colouring {
  const UndirectedGraph& g;
  int n_colours;
  std::map<Edge, int> colour;

  int get(int u, int v) const {
    auto it = colour.find(Edge(u, v));
    return it == colour.end() ? -1 : it->second;
  }

  bool is_free(int v, int c) const {
    for (int w : g.neighbours(v))
      if (get(v, w) == c) return false;
    return true;
  }

  int free_colour(int v) const {
    for (int c = 0; c < n_colours; ++c)
      if (is_free(v, c)) return c;
    throw Error("edge_coloring: no free colour (internal invariant broken)");
  }

  // maximal fan of u starting at start
  std::vector<int> fan(int u, int start) const {
    std::vector<int> f{start};
    std::set<int> used{start};
    bool grew = true;
    while (grew) {
      grew = false;
      for (int w : g.neighbours(u)) {
        if (used.count(w)) continue;
        const int c = get(u, w);
        if (c >= 0 && is_free(f.back(), c)) {
          f.push_back(w);
          used.insert(w);
          grew = true;
          break;
        }
      }
    }
    return f;
  }

  // swap colours along the maximal path from u alternating d, c, d, ...
  void invert_cd_path(int u, int c, int d) {
    int cur = u;
    int want = d;
    std::vector<Edge> path;
    std::set<int> visited{u};
    for (;;) {
      int next = -1;
      for (int w : g.neighbours(cur)) {
        if (get(cur, w) == want && !visited.count(w)) {
          next = w;
          break;
        }
      }
      if (next < 0) break;
      path.emplace_back(cur, next);
      visited.insert(next);
      cur = next;
      want = (want == d) ? c : d;
    }
    for (const Edge& e : path) colour[e] = (colour[e] == c) ? d : c;
  }

  void colour_edge(int u, int v) {
    for (int attempt = 0; attempt < 64; ++attempt) {
      const auto f = fan(u, v);
      const int c = free_colour(u);
      const int d = free_colour(f.back());
      invert_cd_path(u, c, d);
      // smallest prefix that is still a fan and whose end has d free
      for (std::size_t i = 0; i < f.size(); ++i) {
        bool prefix_ok = true;
        for (std::size_t m = 0; m + 1 <= i; ++m) {
          const int cm = get(u, f[m + 1]);
          if (cm < 0 || !is_free(f[m], cm)) {
            prefix_ok = false;
            break;
          }
        }
        if (!prefix_ok || !is_free(f[i], d)) continue;
        // rotate prefix, then assign d to (u, f[i])
        for (std::size_t m = 0; m + 1 <= i; ++m)
          colour[Edge(u, f[m])] = get(u, f[m + 1]);
        colour[Edge(u, f[i])] = d;
        return;
      }
      // inversion disturbed the fan; rebuild and retry
    }
    throw Error("edge_coloring: failed to colour edge (internal)");
  }
};

}  // namespace

std::map<Edge, int> edge_coloring(const UndirectedGraph& graph) {
  Colouring state{graph, graph.max_degree() + 1, {}};
  for (const Edge& e : graph.edges()) state.colour_edge(e.a, e.b);
  return state.colour;
}

}  // namespace qbench
