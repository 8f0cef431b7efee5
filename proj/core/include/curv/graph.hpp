#pragma once

#include <initializer_list>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "curv/errors.hpp"

namespace curv {

using VertexPair = std::pair<int, int>;

// Finite simple undirected graph on dense vertex ids 0..n-1. Immutable after
// construction; pairwise hop distances are computed once up front, so a Graph
// can be shared freely across worker threads. Pairs in different components
// carry the explicit sentinel kUnreached.
class Graph {
 public:
  static constexpr int kUnreached = -1;

  Graph() = default;

  // Duplicate edges collapse; out-of-range endpoints and self-loops are
  // rejected.
  static Graph from_edges(int n, std::span<const VertexPair> edges);
  static Graph from_edges(int n, std::initializer_list<VertexPair> edges);

  int vertex_count() const { return n_; }
  int edge_count() const { return m_; }

  bool adjacent(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    return u != v && matrix_[static_cast<std::size_t>(u) * n_ + v];
  }
  int degree(int v) const { return static_cast<int>(neighbors(v).size()); }
  const std::vector<int>& neighbors(int v) const {
    check_vertex(v);
    return adj_[v];
  }
  // All edges as (u, v) with u < v, lexicographically sorted.
  std::vector<VertexPair> edges() const;

  // Hop distance with kUnreached across components.
  int hop(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    return dist_[static_cast<std::size_t>(u) * n_ + v];
  }
  std::optional<int> distance(int u, int v) const {
    int d = hop(u, v);
    if (d == kUnreached) return std::nullopt;
    return d;
  }
  bool connected() const;

  Graph complement() const;

 private:
  void check_vertex(int v) const {
    if (v < 0 || v >= n_) throw InputError("vertex id out of range: " + std::to_string(v));
  }
  void compute_distances();

  int n_ = 0;
  int m_ = 0;
  std::vector<std::vector<int>> adj_;  // sorted neighbor lists
  std::vector<char> matrix_;           // n*n adjacency
  std::vector<int> dist_;              // n*n hop counts, kUnreached sentinel
};

inline Graph build_graph(int n, std::span<const VertexPair> edges) {
  return Graph::from_edges(n, edges);
}

// Decomposition of V relative to an edge xy:
//   common = N(x) ∩ N(y),  ax = N(x) \ (common ∪ {y}),
//   ay = N(y) \ (common ∪ {x}),  rest = V \ (N(x) ∪ N(y)).
// Together with {x} and {y} these partition the vertex set.
struct EdgeNeighborhood {
  int x = -1;
  int y = -1;
  std::vector<int> common;
  std::vector<int> ax;
  std::vector<int> ay;
  std::vector<int> rest;
};

// Requires x adjacent to y.
EdgeNeighborhood edge_neighborhood(const Graph& g, int x, int y);

}  // namespace curv
