#include "oracles.hpp"

#include <algorithm>
#include <numeric>

#include <curv/graph6.hpp>

namespace oracle {

using curv::Graph;
using curv::ProbabilityMeasure;
using curv::Rational;
using curv::VertexPair;

std::vector<std::vector<int>> floyd_warshall(const Graph& g) {
  const int n = g.vertex_count();
  constexpr int kInf = 1 << 28;
  std::vector<std::vector<int>> d(n, std::vector<int>(n, kInf));
  for (int v = 0; v < n; ++v) d[v][v] = 0;
  for (auto [u, v] : g.edges()) d[u][v] = d[v][u] = 1;
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (d[i][j] >= kInf) d[i][j] = -1;
  return d;
}

namespace {

// Common scaling: integer weights w(v) = L*(mu1(v) - mu2(v)) over the
// support union, plus the scale L.
struct ScaledWeights {
  std::vector<int> vertices;
  std::vector<long> weight;
  long scale = 1;
};

ScaledWeights scale_difference(const ProbabilityMeasure& mu1, const ProbabilityMeasure& mu2) {
  ScaledWeights sw;
  mpz_class lcm = 1;
  for (const auto& [v, m] : mu1.mass) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), m.den().get_mpz_t());
  for (const auto& [v, m] : mu2.mass) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), m.den().get_mpz_t());
  sw.scale = mpz_get_si(lcm.get_mpz_t());
  for (const auto& [v, m] : mu1.mass) sw.vertices.push_back(v);
  for (const auto& [v, m] : mu2.mass) sw.vertices.push_back(v);
  std::sort(sw.vertices.begin(), sw.vertices.end());
  sw.vertices.erase(std::unique(sw.vertices.begin(), sw.vertices.end()), sw.vertices.end());
  for (int v : sw.vertices) {
    Rational diff = mu1.at(v) - mu2.at(v);
    mpz_class scaled = diff.num() * (lcm / diff.den());
    sw.weight.push_back(mpz_get_si(scaled.get_mpz_t()));
  }
  return sw;
}

}  // namespace

Rational wasserstein_dual(const Graph& g, const ProbabilityMeasure& mu1,
                          const ProbabilityMeasure& mu2) {
  ScaledWeights sw = scale_difference(mu1, mu2);
  const std::size_t k = sw.vertices.size();

  // Order vertices so each one is close to an earlier one (cheap BFS-ish
  // ordering by distance from the first), which makes the Lipschitz pruning
  // bite early.
  std::vector<std::size_t> order(k);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    int da = g.hop(sw.vertices[0], sw.vertices[a]);
    int db = g.hop(sw.vertices[0], sw.vertices[b]);
    return da != db ? da < db : a < b;
  });

  long best = 0;
  bool have_best = false;
  std::vector<int> f(k, 0);
  auto dfs = [&](auto&& self, std::size_t idx, long acc) -> void {
    if (idx == k) {
      if (!have_best || acc > best) {
        best = acc;
        have_best = true;
      }
      return;
    }
    const std::size_t i = order[idx];
    const int v = sw.vertices[i];
    const int anchor = sw.vertices[order[0]];
    const int radius = idx == 0 ? 0 : g.hop(anchor, v);
    for (int c = -radius; c <= radius; ++c) {
      bool ok = true;
      for (std::size_t prev = 0; prev < idx; ++prev) {
        const std::size_t j = order[prev];
        if (std::abs(c - f[j]) > g.hop(v, sw.vertices[j])) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      f[i] = c;
      self(self, idx + 1, acc + c * sw.weight[i]);
    }
  };
  dfs(dfs, 0, 0);
  return Rational(best, sw.scale);
}

Rational wasserstein_vertex_enumeration(const Graph& g, const ProbabilityMeasure& mu1,
                                        const ProbabilityMeasure& mu2) {
  std::vector<int> left, right;
  std::vector<long> supply, demand;
  {
    mpz_class lcm = 1;
    for (const auto& [v, m] : mu1.mass) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), m.den().get_mpz_t());
    for (const auto& [v, m] : mu2.mass) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), m.den().get_mpz_t());
    for (const auto& [v, m] : mu1.mass) {
      left.push_back(v);
      mpz_class s = m.num() * (lcm / m.den());
      supply.push_back(mpz_get_si(s.get_mpz_t()));
    }
    for (const auto& [v, m] : mu2.mass) {
      right.push_back(v);
      mpz_class s = m.num() * (lcm / m.den());
      demand.push_back(mpz_get_si(s.get_mpz_t()));
    }
    long scale = mpz_get_si(lcm.get_mpz_t());

    const int k = static_cast<int>(left.size());
    const int l = static_cast<int>(right.size());
    const int arcs = k * l;
    const int tree_size = k + l - 1;
    long best = -1;
    // Enumerate arc subsets of size k+l-1 that form spanning trees of the
    // bipartite support graph, then read the unique flow off by leaf
    // peeling; keep the cheapest nonnegative one.
    std::vector<int> pick;
    auto evaluate_tree = [&](const std::vector<int>& chosen) {
      std::vector<int> deg(k + l, 0);
      for (int a : chosen) {
        deg[a / l] += 1;
        deg[k + a % l] += 1;
      }
      std::vector<long> residual(k + l);
      for (int i = 0; i < k; ++i) residual[i] = supply[i];
      for (int j = 0; j < l; ++j) residual[k + j] = demand[j];
      std::vector<char> used(chosen.size(), 0);
      long cost = 0;
      // Peel leaves; tree_size iterations always succeed on a tree.
      for (int step = 0; step < tree_size; ++step) {
        int pos = -1;
        for (std::size_t c = 0; c < chosen.size(); ++c) {
          if (used[c]) continue;
          int i = chosen[c] / l, j = chosen[c] % l;
          if (deg[i] == 1 || deg[k + j] == 1) {
            pos = static_cast<int>(c);
            break;
          }
        }
        if (pos == -1) return;  // cycle => not a tree
        int i = chosen[pos] / l, j = chosen[pos] % l;
        long amount = deg[i] == 1 ? residual[i] : residual[k + j];
        if (amount < 0) return;  // infeasible basic solution
        residual[i] -= amount;
        residual[k + j] -= amount;
        deg[i] -= 1;
        deg[k + j] -= 1;
        used[pos] = 1;
        cost += amount * g.hop(left[i], right[j]);
      }
      for (long r : residual)
        if (r != 0) return;  // not spanning
      if (best < 0 || cost < best) best = cost;
    };
    auto choose = [&](auto&& self, int from, int remaining) -> void {
      if (remaining == 0) {
        evaluate_tree(pick);
        return;
      }
      for (int a = from; a + remaining <= arcs; ++a) {
        pick.push_back(a);
        self(self, a + 1, remaining - 1);
        pick.pop_back();
      }
    };
    choose(choose, 0, tree_size);
    if (best < 0) throw std::logic_error("vertex enumeration found no feasible tree");
    return Rational(best, scale);
  }
}

namespace {

bool cycle_completes(const Graph& g, std::vector<int>& perm, std::size_t fixed) {
  if (fixed == perm.size())
    return g.adjacent(perm.back(), perm.front());
  for (std::size_t i = fixed; i < perm.size(); ++i) {
    std::swap(perm[fixed], perm[i]);
    bool mirror_dup = fixed + 1 == perm.size() && perm.size() > 2 && perm[1] > perm.back();
    if (!mirror_dup && g.adjacent(perm[fixed - 1], perm[fixed]) &&
        cycle_completes(g, perm, fixed + 1)) {
      std::swap(perm[fixed], perm[i]);
      return true;
    }
    std::swap(perm[fixed], perm[i]);
  }
  return false;
}

}  // namespace

bool has_cycle_brute(const Graph& g, int k) {
  const int n = g.vertex_count();
  std::vector<int> subset;
  auto choose = [&](auto&& self, int from) -> bool {
    if (static_cast<int>(subset.size()) == k) {
      std::vector<int> perm = subset;  // first element fixed as the minimum
      return cycle_completes(g, perm, 1);
    }
    for (int v = from; v + (k - static_cast<int>(subset.size())) <= n; ++v) {
      subset.push_back(v);
      if (self(self, v + 1)) return true;
      subset.pop_back();
    }
    return false;
  };
  return choose(choose, 0);
}

Graph relabel(const Graph& g, const std::vector<int>& perm) {
  std::vector<VertexPair> edges;
  for (auto [u, v] : g.edges()) edges.emplace_back(perm[u], perm[v]);
  return Graph::from_edges(g.vertex_count(), edges);
}

std::string canonical_graph6(const Graph& g) {
  std::vector<int> perm(g.vertex_count());
  std::iota(perm.begin(), perm.end(), 0);
  std::string best;
  do {
    std::string s = curv::write_graph6(relabel(g, perm));
    if (best.empty() || s < best) best = s;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

Graph er_graph(int n, int prob_num, int prob_den, std::mt19937_64& rng) {
  std::vector<VertexPair> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (static_cast<long>(rng() % static_cast<std::uint64_t>(prob_den)) < prob_num)
        edges.emplace_back(u, v);
  return Graph::from_edges(n, edges);
}

}  // namespace oracle
