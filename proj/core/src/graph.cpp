#include "curv/graph.hpp"

#include <algorithm>
#include <string>

namespace curv {

Graph Graph::from_edges(int n, std::span<const VertexPair> edges) {
  if (n < 0) throw InputError("vertex count must be non-negative");
  Graph g;
  g.n_ = n;
  g.adj_.resize(n);
  g.matrix_.assign(static_cast<std::size_t>(n) * n, 0);
  for (auto [u, v] : edges) {
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw InputError("edge endpoint out of range: (" + std::to_string(u) + "," +
                       std::to_string(v) + ") with n=" + std::to_string(n));
    if (u == v) throw InputError("self-loop rejected at vertex " + std::to_string(u));
    auto& cell = g.matrix_[static_cast<std::size_t>(u) * n + v];
    if (cell) continue;  // duplicate collapses
    cell = 1;
    g.matrix_[static_cast<std::size_t>(v) * n + u] = 1;
    g.adj_[u].push_back(v);
    g.adj_[v].push_back(u);
    ++g.m_;
  }
  for (auto& nb : g.adj_) std::sort(nb.begin(), nb.end());
  g.compute_distances();
  return g;
}

Graph Graph::from_edges(int n, std::initializer_list<VertexPair> edges) {
  return from_edges(n, std::span<const VertexPair>(edges.begin(), edges.size()));
}

std::vector<VertexPair> Graph::edges() const {
  std::vector<VertexPair> out;
  out.reserve(m_);
  for (int u = 0; u < n_; ++u)
    for (int v : adj_[u])
      if (u < v) out.emplace_back(u, v);
  return out;
}

void Graph::compute_distances() {
  dist_.assign(static_cast<std::size_t>(n_) * n_, kUnreached);
  std::vector<int> queue;
  queue.reserve(n_);
  for (int s = 0; s < n_; ++s) {
    int* d = dist_.data() + static_cast<std::size_t>(s) * n_;
    d[s] = 0;
    queue.clear();
    queue.push_back(s);
    for (std::size_t head = 0; head < queue.size(); ++head) {
      int u = queue[head];
      for (int v : adj_[u]) {
        if (d[v] == kUnreached) {
          d[v] = d[u] + 1;
          queue.push_back(v);
        }
      }
    }
  }
}

bool Graph::connected() const {
  if (n_ <= 1) return true;
  for (int v = 1; v < n_; ++v)
    if (dist_[v] == kUnreached) return false;
  return true;
}

Graph Graph::complement() const {
  std::vector<VertexPair> comp_edges;
  for (int u = 0; u < n_; ++u)
    for (int v = u + 1; v < n_; ++v)
      if (!matrix_[static_cast<std::size_t>(u) * n_ + v]) comp_edges.emplace_back(u, v);
  return from_edges(n_, comp_edges);
}

EdgeNeighborhood edge_neighborhood(const Graph& g, int x, int y) {
  if (!g.adjacent(x, y))
    throw ContractViolation("edge_neighborhood requires adjacent vertices, got (" +
                            std::to_string(x) + "," + std::to_string(y) + ")");
  EdgeNeighborhood en;
  en.x = x;
  en.y = y;
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (v == x || v == y) continue;
    bool nx = g.adjacent(x, v);
    bool ny = g.adjacent(y, v);
    if (nx && ny)
      en.common.push_back(v);
    else if (nx)
      en.ax.push_back(v);
    else if (ny)
      en.ay.push_back(v);
    else
      en.rest.push_back(v);
  }
  return en;
}

}  // namespace curv
