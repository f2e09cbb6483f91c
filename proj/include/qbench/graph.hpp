#pragma once

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

namespace qbench {

/// Unordered pair of distinct vertices, stored with first < second.
struct Edge {
  int a;
  int b;
  Edge(int u, int v) : a(u < v ? u : v), b(u < v ? v : u) {}
  friend bool operator<(const Edge& x, const Edge& y) {
    return x.a != y.a ? x.a < y.a : x.b < y.b;
  }
  friend bool operator==(const Edge& x, const Edge& y) {
    return x.a == y.a && x.b == y.b;
  }
};

/// Simple undirected graph: no self-loops, no duplicate edges.
class UndirectedGraph {
 public:
  explicit UndirectedGraph(int n_vertices);

  int n_vertices() const { return n_; }
  const std::vector<Edge>& edges() const { return edges_; }

  void add_edge(int u, int v);
  bool has_edge(int u, int v) const;

  std::vector<int> degrees() const;
  int max_degree() const;
  bool connected() const;

  /// Neighbours of v in ascending order.
  std::vector<int> neighbours(int v) const;

  /// BFS distances from source (-1 when unreachable).
  std::vector<int> bfs_distances(int source) const;

 private:
  int n_;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> adj_;
};

/// Proper edge colouring with at most max_degree + 1 colours
/// (Misra & Gries constructive proof of Vizing's theorem).
std::map<Edge, int> edge_coloring(const UndirectedGraph& graph);

}  // namespace qbench
