#include "curv/curvature.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

#include "curv/measure.hpp"
#include "parallel.hpp"

namespace curv {

namespace {

// Vertex classification relative to an edge, as index-addressable flags.
struct EdgeSets {
  std::vector<char> in_common, in_ax, in_ay;
  int common_size = 0, ax_size = 0, ay_size = 0;

  EdgeSets(const Graph& g, int x, int y) {
    const int n = g.vertex_count();
    in_common.assign(n, 0);
    in_ax.assign(n, 0);
    in_ay.assign(n, 0);
    EdgeNeighborhood en = edge_neighborhood(g, x, y);
    for (int v : en.common) in_common[v] = 1;
    for (int v : en.ax) in_ax[v] = 1;
    for (int v : en.ay) in_ay[v] = 1;
    common_size = static_cast<int>(en.common.size());
    ax_size = static_cast<int>(en.ax.size());
    ay_size = static_cast<int>(en.ay.size());
  }
};

// Checks that a plan has the simple shape pinned at pi(x,y) = p - (1-p)/d_y
// between the idleness measures of the edge (x,y) with d_x >= d_y, p < 1.
// Returns the idleness read off the plan, or nothing if the shape is wrong.
std::optional<Rational> simple_shape_idleness(const Graph& g, int x, int y,
                                              const TransportPlan& plan) {
  if (!g.adjacent(x, y)) return std::nullopt;
  const int dx = g.degree(x), dy = g.degree(y);
  if (dx < dy) return std::nullopt;
  const Rational p = plan.source.at(x);
  if (p >= Rational(1)) return std::nullopt;
  if (plan.source.mass != idleness_measure(g, x, p).mass) return std::nullopt;
  if (plan.target.mass != idleness_measure(g, y, p).mass) return std::nullopt;
  if (!plan.marginals_valid()) return std::nullopt;
  for (const auto& [v, m] : plan.source.mass) {
    if (plan.mass_at(v, v) != std::min(m, plan.target.at(v))) return std::nullopt;
  }
  const Rational pin = p - (Rational(1) - p) / Rational(dy);
  if (plan.mass_at(x, y) != pin) return std::nullopt;
  return p;
}

}  // namespace

Rational evaluate_witness(const Graph& g, const LipschitzWitness& w) {
  if (!g.adjacent(w.x, w.y))
    throw ContractViolation("witness: x and y must be adjacent");
  std::vector<int> domain = g.neighbors(w.x);
  for (int v : g.neighbors(w.y)) domain.push_back(v);
  std::sort(domain.begin(), domain.end());
  domain.erase(std::unique(domain.begin(), domain.end()), domain.end());
  if (domain.size() != w.values.size())
    throw ContractViolation("witness: domain must be exactly N(x) ∪ N(y)");
  for (int v : domain)
    if (w.values.find(v) == w.values.end())
      throw ContractViolation("witness: missing value at vertex " + std::to_string(v));
  if (w.values.at(w.x) != 0 || w.values.at(w.y) != 1)
    throw ContractViolation("witness: anchors must be f(x)=0, f(y)=1");
  for (std::size_t i = 0; i < domain.size(); ++i) {
    for (std::size_t j = i + 1; j < domain.size(); ++j) {
      int u = domain[i], v = domain[j];
      int diff = w.values.at(u) - w.values.at(v);
      if (std::abs(diff) > g.hop(u, v))
        throw ContractViolation("witness: not 1-Lipschitz at pair (" + std::to_string(u) +
                                "," + std::to_string(v) + ")");
    }
  }
  long sx = 0, sy = 0;
  for (int u : g.neighbors(w.x)) sx += w.values.at(u);
  for (int u : g.neighbors(w.y)) sy += w.values.at(u);
  // Delta f(x) - Delta f(y) with f(x)=0, f(y)=1.
  return Rational(sx, g.degree(w.x)) - Rational(sy, g.degree(w.y)) + Rational(1);
}

CurvatureResult lly_edge_at(const Graph& g, int x, int y, const Rational& p) {
  if (!g.adjacent(x, y))
    throw ContractViolation("curvature requires an edge, got (" + std::to_string(x) + "," +
                            std::to_string(y) + ")");
  const int dmax = std::max(g.degree(x), g.degree(y));
  if (p < Rational(1, dmax + 1) || p >= Rational(1))
    throw InputError("idleness p=" + p.str() + " outside the normalization interval [1/" +
                     std::to_string(dmax + 1) + ", 1)");
  WassersteinResult w =
      wasserstein(g, idleness_measure(g, x, p), idleness_measure(g, y, p));
  CurvatureResult res;
  res.kappa_p = Rational(1) - w.value;  // rho(x,y) = 1
  res.kappa = res.kappa_p / (Rational(1) - p);
  res.p_used = p;
  res.plan_witness = std::move(w.plan);
  return res;
}

CurvatureResult lly_edge(const Graph& g, int x, int y) {
  return lly_edge_at(g, x, y, Rational(1, 2));
}

std::pair<Rational, LipschitzWitness> lly_edge_dual(const Graph& g, int x, int y) {
  if (!g.adjacent(x, y))
    throw ContractViolation("curvature requires an edge, got (" + std::to_string(x) + "," +
                            std::to_string(y) + ")");
  const int dx = g.degree(x), dy = g.degree(y);
  const EdgeSets sets(g, x, y);

  // Free vertices and their value ranges. Anchors f(x)=0, f(y)=1 and
  // Lip(1) against rho(x,.), rho(y,.) <= 2 pin each block's range.
  std::vector<int> order;
  std::vector<std::pair<int, int>> range;  // inclusive
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (sets.in_ax[v]) {
      order.push_back(v);
      range.emplace_back(-1, 1);
    } else if (sets.in_common[v]) {
      order.push_back(v);
      range.emplace_back(0, 1);
    } else if (sets.in_ay[v]) {
      order.push_back(v);
      range.emplace_back(0, 2);
    }
  }

  const std::size_t k = order.size();
  std::vector<int> value(k, 0), best(k, 0);
  // Scaled objective: sx*dy - sy*dx over assigned contributions; the anchors
  // contribute f(y)=1 to sx and f(x)=0 to sy.
  long best_scaled = 0;
  bool have_best = false;

  // Contribution of vertex order[i] to sx/sy.
  std::vector<int> to_x(k), to_y(k);
  for (std::size_t i = 0; i < k; ++i) {
    to_x[i] = g.adjacent(x, order[i]) ? 1 : 0;
    to_y[i] = g.adjacent(y, order[i]) ? 1 : 0;
  }

  auto dfs = [&](auto&& self, std::size_t i, long sx, long sy) -> void {
    if (i == k) {
      long scaled = sx * dy - sy * dx;
      if (!have_best || scaled < best_scaled) {
        have_best = true;
        best_scaled = scaled;
        best = value;
      }
      return;
    }
    const int v = order[i];
    for (int c = range[i].first; c <= range[i].second; ++c) {
      if (std::abs(c - 0) > g.hop(v, x) || std::abs(c - 1) > g.hop(v, y)) continue;
      bool ok = true;
      for (std::size_t j = 0; j < i; ++j) {
        if (std::abs(c - value[j]) > g.hop(v, order[j])) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      value[i] = c;
      self(self, i + 1, sx + static_cast<long>(c) * to_x[i], sy + static_cast<long>(c) * to_y[i]);
    }
  };
  dfs(dfs, 0, /*sx=*/1, /*sy=*/0);
  if (!have_best) throw InternalError("dual enumeration found no feasible function");

  LipschitzWitness witness;
  witness.x = x;
  witness.y = y;
  witness.values[x] = 0;
  witness.values[y] = 1;
  for (std::size_t i = 0; i < k; ++i) witness.values[order[i]] = best[i];
  Rational kappa = Rational(best_scaled, static_cast<long>(dx) * dy) + Rational(1);
  return {kappa, witness};
}

Rational lower_bound_lemma32(const Graph& g, int x, int y) {
  if (!g.adjacent(x, y))
    throw ContractViolation("lower_bound_lemma32 requires an edge");
  if (g.degree(x) < g.degree(y)) std::swap(x, y);
  const EdgeSets sets(g, x, y);
  const long c = sets.common_size;
  return Rational(2 * c + 2, c + sets.ax_size + 1) -
         Rational(c + 2L * sets.ay_size, c + sets.ay_size + 1);
}

std::optional<Rational> lower_bound_lemma33(const Graph& g, int x, int y,
                                            const TransportPlan& plan, const Rational& p) {
  std::optional<Rational> shape_p = simple_shape_idleness(g, x, y, plan);
  if (!shape_p || *shape_p != p)
    throw ContractViolation(
        "lower_bound_lemma33: plan is not a simple plan with pi(x,y) = p - (1-p)/d_y "
        "for this edge and idleness");
  const EdgeSets sets(g, x, y);
  for (const auto& [uv, amount] : plan.flow) {
    if (amount.sign() <= 0) continue;
    if (sets.in_ax[uv.first] && sets.in_ay[uv.second] && g.hop(uv.first, uv.second) > 2)
      return std::nullopt;  // hypothesis fails
  }
  const int dx = g.degree(x), dy = g.degree(y);
  const Rational m2 = plan_m2(plan, g);
  return Rational(1, dy) + Rational(sets.common_size + 1, dx) - m2 / (Rational(1) - p);
}

bool corollary34_certificate(const Graph& g, int x, int y, const TransportPlan& plan) {
  if (!simple_shape_idleness(g, x, y, plan)) return false;
  const EdgeSets sets(g, x, y);
  for (const auto& [uv, amount] : plan.flow) {
    if (amount.sign() <= 0) continue;
    if (sets.in_ax[uv.first] && (sets.in_ay[uv.second] || sets.in_common[uv.second]) &&
        g.hop(uv.first, uv.second) != 1)
      return false;
  }
  return true;
}

std::optional<EdgeCurvature> min_edge_curvature(const Graph& g) {
  std::optional<EdgeCurvature> best;
  for (auto [u, v] : g.edges()) {
    Rational kappa = lly_edge(g, u, v).kappa;
    if (!best || kappa < best->kappa) best = EdgeCurvature{kappa, u, v};
  }
  return best;
}

std::vector<EdgeCurvature> all_edge_curvatures(const Graph& g, int jobs) {
  const std::vector<VertexPair> es = g.edges();
  std::vector<EdgeCurvature> out(es.size());
  detail::parallel_for(es.size(), jobs, [&](std::size_t i) {
    auto [u, v] = es[i];
    out[i] = EdgeCurvature{lly_edge(g, u, v).kappa, u, v};
  });
  return out;
}

}  // namespace curv
