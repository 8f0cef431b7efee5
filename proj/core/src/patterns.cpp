#include "curv/patterns.hpp"

#include <algorithm>
#include <string>

namespace curv {

namespace {

// Extends path (rooted at its minimal vertex s) by unused vertices > s;
// closes when k vertices are placed and the last one sees s.
bool cycle_dfs(const Graph& g, int k, std::vector<int>& path, std::vector<char>& used) {
  const int s = path.front();
  const int last = path.back();
  if (static_cast<int>(path.size()) == k) return g.adjacent(last, s);
  for (int v : g.neighbors(last)) {
    if (v <= s || used[v]) continue;
    // Direction symmetry break: the successor of s is smaller than its
    // predecessor on the closed cycle.
    if (static_cast<int>(path.size()) == k - 1 && path.size() >= 2 && v < path[1]) continue;
    used[v] = 1;
    path.push_back(v);
    if (cycle_dfs(g, k, path, used)) return true;
    path.pop_back();
    used[v] = 0;
  }
  return false;
}

}  // namespace

std::optional<std::vector<int>> contains_cycle_of_length(const Graph& g, int k) {
  const int n = g.vertex_count();
  if (k < 3 || k > n)
    throw InputError("cycle length k=" + std::to_string(k) + " outside [3, n=" +
                     std::to_string(n) + "]");
  std::vector<char> used(n, 0);
  std::vector<int> path;
  path.reserve(k);
  for (int s = 0; s + k <= n; ++s) {
    if (g.degree(s) < 2) continue;
    used.assign(n, 0);
    used[s] = 1;
    path.assign(1, s);
    if (cycle_dfs(g, k, path, used)) return path;
  }
  return std::nullopt;
}

std::optional<K2tWitness> contains_k2t(const Graph& g, int t) {
  if (t < 1) throw InputError("contains_k2t requires t >= 1");
  const int n = g.vertex_count();
  for (int u = 0; u < n; ++u) {
    const auto& nu = g.neighbors(u);
    for (int v = u + 1; v < n; ++v) {
      K2tWitness w;
      w.u = u;
      w.v = v;
      for (int a : nu) {
        if (a != v && g.adjacent(v, a)) {
          w.common.push_back(a);
          if (static_cast<int>(w.common.size()) == t) return w;
        }
      }
    }
  }
  return std::nullopt;
}

namespace {

bool kst_dfs(const Graph& g, int s, int t, int first, std::vector<int>& chosen,
             std::vector<int>& common, KstWitness& out) {
  if (static_cast<int>(chosen.size()) == s) {
    if (static_cast<int>(common.size()) < t) return false;
    out.side_s = chosen;
    out.side_t.assign(common.begin(), common.begin() + t);
    return true;
  }
  const int n = g.vertex_count();
  const int remaining = s - static_cast<int>(chosen.size());
  for (int v = first; v + remaining <= n; ++v) {
    std::vector<int> next_common;
    if (chosen.empty()) {
      next_common = g.neighbors(v);
    } else {
      for (int w : common)
        if (w != v && g.adjacent(v, w)) next_common.push_back(w);
    }
    // Members of the s-side must not reappear on the t-side.
    std::erase_if(next_common, [&](int w) {
      return std::find(chosen.begin(), chosen.end(), w) != chosen.end();
    });
    if (static_cast<int>(next_common.size()) < t) continue;
    chosen.push_back(v);
    std::swap(common, next_common);
    if (kst_dfs(g, s, t, v + 1, chosen, common, out)) return true;
    std::swap(common, next_common);
    chosen.pop_back();
  }
  return false;
}

}  // namespace

std::optional<KstWitness> contains_kst(const Graph& g, int s, int t) {
  if (s < 1 || s > t) throw InputError("contains_kst requires 1 <= s <= t");
  if (s > 4) throw InputError("contains_kst: s > 4 exceeds the enumeration guard");
  std::vector<int> chosen, common;
  KstWitness out;
  if (kst_dfs(g, s, t, 0, chosen, common, out)) return out;
  return std::nullopt;
}

bool complement_is_matching(const Graph& g) {
  const int n = g.vertex_count();
  for (int v = 0; v < n; ++v)
    if (n - 1 - g.degree(v) > 1) return false;
  return true;
}

std::variant<AMatching, HallViolation> hall_matching(const Bipartite& b) {
  if (static_cast<int>(b.adj.size()) != b.left)
    throw InputError("hall_matching: adjacency size must equal the left side");
  for (const auto& row : b.adj)
    for (int v : row)
      if (v < 0 || v >= b.right) throw InputError("hall_matching: right index out of range");

  std::vector<int> match_a(b.left, -1), match_b(b.right, -1);
  std::vector<char> visited(b.right);
  auto augment = [&](auto&& self, int a) -> bool {
    for (int v : b.adj[a]) {
      if (visited[v]) continue;
      visited[v] = 1;
      if (match_b[v] == -1 || self(self, match_b[v])) {
        match_a[a] = v;
        match_b[v] = a;
        return true;
      }
    }
    return false;
  };
  int unmatched = -1;
  for (int a = 0; a < b.left; ++a) {
    visited.assign(b.right, 0);
    if (!augment(augment, a)) {
      unmatched = a;
      break;
    }
  }
  if (unmatched == -1) return AMatching{std::move(match_a)};

  // Alternating reachability from the unmatched vertex gives a set S with
  // |N(S)| = |S| - 1: every reached B-vertex is matched back into S.
  std::vector<char> in_s(b.left, 0), reached_b(b.right, 0);
  std::vector<int> stack{unmatched};
  in_s[unmatched] = 1;
  while (!stack.empty()) {
    int a = stack.back();
    stack.pop_back();
    for (int v : b.adj[a]) {
      if (reached_b[v]) continue;
      reached_b[v] = 1;
      if (match_b[v] != -1 && !in_s[match_b[v]]) {
        in_s[match_b[v]] = 1;
        stack.push_back(match_b[v]);
      }
    }
  }
  HallViolation viol;
  for (int a = 0; a < b.left; ++a)
    if (in_s[a]) viol.subset.push_back(a);
  return viol;
}

std::optional<PatternWitness> find_pattern(const Graph& g, const PatternQuery& q) {
  const Graph* target = &g;
  Graph comp;
  if (q.target == PatternQuery::Target::complement) {
    comp = g.complement();
    target = &comp;
  }
  if (q.kind == PatternQuery::Kind::cycle) {
    if (q.k < 3) throw InputError("pattern query: cycle length must be >= 3");
    if (q.k > target->vertex_count()) return std::nullopt;
    auto cyc = contains_cycle_of_length(*target, q.k);
    if (!cyc) return std::nullopt;
    return PatternWitness{{*cyc}};
  }
  if (q.s < 1 || q.t < 1) throw InputError("pattern query: bipartite sides must be >= 1");
  std::optional<KstWitness> w;
  if (q.s == 2) {
    auto k2t = contains_k2t(*target, q.t);
    if (k2t) w = KstWitness{{k2t->u, k2t->v}, std::move(k2t->common)};
  } else {
    w = contains_kst(*target, q.s, q.t);
  }
  if (!w) return std::nullopt;
  return PatternWitness{{std::move(w->side_s), std::move(w->side_t)}};
}

}  // namespace curv
