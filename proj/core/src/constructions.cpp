#include "curv/constructions.hpp"

#include <string>
#include <vector>

namespace curv {

SharpnessGraph sharpness_graph(const SharpnessParams& p) {
  if (p.a < 0 || p.b < 0 || p.c < 0 || p.d < 0)
    throw InputError("sharpness_graph: block sizes must be non-negative");
  SharpnessGraph sg;
  sg.params = p;
  int next = 2;
  auto take = [&next](int count) {
    std::pair<int, int> range{next, next + count};
    next += count;
    return range;
  };
  sg.block_a = take(p.a);
  sg.block_b = take(p.b);
  sg.block_c = take(p.c);
  sg.block_d = take(p.d);

  std::vector<VertexPair> edges;
  auto clique = [&edges](std::pair<int, int> r) {
    for (int u = r.first; u < r.second; ++u)
      for (int v = u + 1; v < r.second; ++v) edges.emplace_back(u, v);
  };
  auto join = [&edges](std::pair<int, int> r1, std::pair<int, int> r2) {
    for (int u = r1.first; u < r1.second; ++u)
      for (int v = r2.first; v < r2.second; ++v) edges.emplace_back(u, v);
  };
  auto star = [&edges](int center, std::pair<int, int> r) {
    for (int v = r.first; v < r.second; ++v) edges.emplace_back(center, v);
  };

  edges.emplace_back(sg.x, sg.y);
  star(sg.x, sg.block_a);  // E1: x ~ A ∪ B, A ∪ B a clique
  star(sg.x, sg.block_b);
  clique(sg.block_a);
  clique(sg.block_b);
  join(sg.block_a, sg.block_b);
  star(sg.y, sg.block_c);  // E2: y ~ C, C a clique
  clique(sg.block_c);
  join(sg.block_b, sg.block_c);  // E3
  join(sg.block_d, sg.block_a);  // E4: D ~ A ∪ B ∪ C, D a clique
  join(sg.block_d, sg.block_b);
  join(sg.block_d, sg.block_c);
  clique(sg.block_d);

  sg.graph = Graph::from_edges(p.vertex_count(), edges);
  return sg;
}

Rational sharpness_upper_bound(const SharpnessParams& p) {
  return Rational(1 - p.a, p.a + p.b + 1) + Rational(1, p.c + 1);
}

LipschitzWitness sharpness_witness(const SharpnessGraph& sg) {
  LipschitzWitness w;
  w.x = sg.x;
  w.y = sg.y;
  w.values[sg.x] = 0;
  w.values[sg.y] = 1;
  for (int v = sg.block_a.first; v < sg.block_a.second; ++v) w.values[v] = -1;
  for (int v = sg.block_b.first; v < sg.block_b.second; ++v) w.values[v] = 0;
  for (int v = sg.block_c.first; v < sg.block_c.second; ++v) w.values[v] = 1;
  // D is disjoint from N(x) ∪ N(y); it carries no witness value.
  return w;
}

SharpnessParams preset_c4(int n) {
  if (n < 8) throw InputError("preset_c4 requires n >= 8, got " + std::to_string(n));
  SharpnessParams p;
  p.a = (n + 1) / 2;
  p.b = n / 2 - 3;
  p.c = 1;
  p.d = 0;
  return p;
}

SharpnessParams preset_k2t(int t, int n) {
  if (t < 3) throw InputError("preset_k2t requires t >= 3, got t=" + std::to_string(t));
  if (n < 3 * t - 2)
    throw InputError("preset_k2t requires n >= 3t-2 = " + std::to_string(3 * t - 2) +
                     ", got n=" + std::to_string(n));
  SharpnessParams p;
  p.a = t - 2;
  p.b = n - 3 * t + 3;
  p.c = t - 2;
  p.d = t - 1;
  return p;
}

Graph path_graph(int n) {
  if (n < 1) throw InputError("path_graph requires n >= 1");
  std::vector<VertexPair> edges;
  for (int v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
  return Graph::from_edges(n, edges);
}

Graph cycle_graph(int n) {
  if (n < 3) throw InputError("cycle_graph requires n >= 3");
  std::vector<VertexPair> edges;
  for (int v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
  edges.emplace_back(n - 1, 0);
  return Graph::from_edges(n, edges);
}

Graph complete_graph(int n) {
  if (n < 1) throw InputError("complete_graph requires n >= 1");
  std::vector<VertexPair> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  return Graph::from_edges(n, edges);
}

Graph complete_bipartite_graph(int s, int t) {
  if (s < 1 || t < 1) throw InputError("complete_bipartite_graph requires s, t >= 1");
  std::vector<VertexPair> edges;
  for (int u = 0; u < s; ++u)
    for (int v = 0; v < t; ++v) edges.emplace_back(u, s + v);
  return Graph::from_edges(s + t, edges);
}

Graph complete_minus_matching(int n, int m) {
  if (n < 1 || m < 0 || 2 * m > n)
    throw InputError("complete_minus_matching requires 0 <= m <= n/2");
  std::vector<VertexPair> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (!(v == u + 1 && u % 2 == 0 && u < 2 * m)) edges.emplace_back(u, v);
  return Graph::from_edges(n, edges);
}

Graph standard_family(std::string_view name, std::span<const int> params) {
  auto want = [&](std::size_t k) {
    if (params.size() != k)
      throw InputError("family '" + std::string(name) + "' expects " + std::to_string(k) +
                       " parameter(s), got " + std::to_string(params.size()));
  };
  if (name == "path") {
    want(1);
    return path_graph(params[0]);
  }
  if (name == "cycle") {
    want(1);
    return cycle_graph(params[0]);
  }
  if (name == "complete") {
    want(1);
    return complete_graph(params[0]);
  }
  if (name == "complete-bipartite") {
    want(2);
    return complete_bipartite_graph(params[0], params[1]);
  }
  if (name == "complete-minus-matching") {
    want(2);
    return complete_minus_matching(params[0], params[1]);
  }
  throw InputError("unknown graph family '" + std::string(name) + "'");
}

}  // namespace curv
