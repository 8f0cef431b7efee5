#include "curv/transport.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <string>

namespace curv {

namespace {

// Largest supply scale accepted for the int64 flow solver. Costs are hop
// counts (< 2^13 after the graph6 size cap), so total cost stays below
// 2^55 and never overflows.
constexpr long kMaxScale = 1L << 42;

// Small min-cost max-flow network: successive shortest paths, Dijkstra with
// node potentials. All arc costs must be non-negative.
class FlowNetwork {
 public:
  explicit FlowNetwork(int n) : adj_(n), n_(n) {}

  // Returns the index of the forward arc within u's adjacency.
  std::size_t add_arc(int u, int v, long long cap, long long cost) {
    adj_[u].push_back({v, cap, cost, adj_[v].size()});
    adj_[v].push_back({u, 0, -cost, adj_[u].size() - 1});
    return adj_[u].size() - 1;
  }

  // Pushes as much flow as possible from s to t; returns (flow, cost).
  std::pair<long long, long long> run(int s, int t) {
    constexpr long long kInf = std::numeric_limits<long long>::max() / 4;
    std::vector<long long> potential(n_, 0), dist(n_);
    std::vector<int> prev_node(n_), prev_arc(n_);
    long long flow = 0, cost = 0;
    for (;;) {
      dist.assign(n_, kInf);
      dist[s] = 0;
      using Item = std::pair<long long, int>;
      std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
      heap.emplace(0, s);
      while (!heap.empty()) {
        auto [d, u] = heap.top();
        heap.pop();
        if (d > dist[u]) continue;
        for (std::size_t i = 0; i < adj_[u].size(); ++i) {
          const Arc& a = adj_[u][i];
          if (a.cap == 0) continue;
          long long nd = d + a.cost + potential[u] - potential[a.to];
          if (nd < dist[a.to]) {
            dist[a.to] = nd;
            prev_node[a.to] = u;
            prev_arc[a.to] = static_cast<int>(i);
            heap.emplace(nd, a.to);
          }
        }
      }
      if (dist[t] >= kInf) break;
      for (int v = 0; v < n_; ++v)
        if (dist[v] < kInf) potential[v] += dist[v];
      long long push = kInf;
      for (int v = t; v != s; v = prev_node[v])
        push = std::min(push, adj_[prev_node[v]][prev_arc[v]].cap);
      for (int v = t; v != s; v = prev_node[v]) {
        Arc& a = adj_[prev_node[v]][prev_arc[v]];
        a.cap -= push;
        adj_[a.to][a.rev].cap += push;
        cost += push * a.cost;
      }
      flow += push;
    }
    return {flow, cost};
  }

  long long flow_on(int u, std::size_t arc_index) const {
    const Arc& a = adj_[u][arc_index];
    return adj_[a.to][a.rev].cap;  // reverse arc accumulated the pushed flow
  }

 private:
  struct Arc {
    int to;
    long long cap;
    long long cost;
    std::size_t rev;
  };
  std::vector<std::vector<Arc>> adj_;
  int n_;
};

// mu scaled by L: exact integer masses.
std::vector<long long> scaled_masses(const ProbabilityMeasure& mu, const mpz_class& scale) {
  std::vector<long long> out;
  out.reserve(mu.mass.size());
  for (const auto& [v, m] : mu.mass) {
    mpz_class q = scale / m.den();  // exact by construction of the lcm
    mpz_class amount = m.num() * q;
    out.push_back(mpz_get_si(amount.get_mpz_t()));
  }
  return out;
}

struct ScaledSolution {
  long long scale = 1;
  long long cost = 0;
  // (source vertex, target vertex, scaled amount), positive entries only
  std::vector<std::tuple<int, int, long long>> flows;
};

// Solve the transportation problem between two positive rational mass
// vectors with hop-count costs. Totals must agree.
ScaledSolution solve_transport(const Graph& g, const ProbabilityMeasure& mu1,
                               const ProbabilityMeasure& mu2, long extra_scale) {
  mpz_class lcm_den = extra_scale;
  for (const auto& [v, m] : mu1.mass) mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), m.den().get_mpz_t());
  for (const auto& [v, m] : mu2.mass) mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), m.den().get_mpz_t());
  if (cmp(lcm_den, kMaxScale) > 0)
    throw InputError("transport: mass denominators too large for exact scaling (lcm " +
                     lcm_den.get_str() + ")");

  const std::vector<int> left = mu1.support();
  const std::vector<int> right = mu2.support();
  const std::vector<long long> supply = scaled_masses(mu1, lcm_den);
  const std::vector<long long> demand = scaled_masses(mu2, lcm_den);

  const int k = static_cast<int>(left.size());
  const int l = static_cast<int>(right.size());
  const int src = k + l, snk = k + l + 1;
  FlowNetwork net(k + l + 2);
  for (int i = 0; i < k; ++i) net.add_arc(src, i, supply[i], 0);
  for (int j = 0; j < l; ++j) net.add_arc(k + j, snk, demand[j], 0);
  std::vector<std::vector<std::size_t>> pair_arc(k, std::vector<std::size_t>(l));
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < l; ++j) {
      int d = g.hop(left[i], right[j]);
      if (d == Graph::kUnreached)
        throw ContractViolation("transport: vertices " + std::to_string(left[i]) + " and " +
                                std::to_string(right[j]) + " lie in different components");
      pair_arc[i][j] = net.add_arc(i, k + j, std::min(supply[i], demand[j]), d);
    }
  }

  auto [flow, cost] = net.run(src, snk);
  long long total = 0;
  for (long long s : supply) total += s;
  if (flow != total)
    throw InternalError("transport: network did not saturate supplies (unequal totals?)");

  ScaledSolution out;
  out.scale = mpz_get_si(lcm_den.get_mpz_t());
  out.cost = cost;
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < l; ++j) {
      long long f = net.flow_on(i, pair_arc[i][j]);
      if (f > 0) out.flows.emplace_back(left[i], right[j], f);
    }
  return out;
}

void require_valid_measure(const ProbabilityMeasure& mu, const char* which) {
  if (!mu.is_valid())
    throw ContractViolation(std::string("transport: ") + which +
                            " measure is not a probability measure");
}

}  // namespace

Rational TransportPlan::cost(const Graph& g) const {
  Rational total;
  for (const auto& [uv, amount] : flow) {
    int d = g.hop(uv.first, uv.second);
    if (d == Graph::kUnreached)
      throw ContractViolation("plan cost: pair at infinite distance");
    total += Rational(d) * amount;
  }
  return total;
}

bool TransportPlan::marginals_valid() const {
  std::map<int, Rational> row, col;
  for (const auto& [uv, amount] : flow) {
    if (amount.sign() <= 0) return false;
    row[uv.first] += amount;
    col[uv.second] += amount;
  }
  auto matches = [](const std::map<int, Rational>& sums, const ProbabilityMeasure& mu) {
    for (const auto& [v, s] : sums)
      if (mu.at(v) != s) return false;
    for (const auto& [v, m] : mu.mass)
      if (sums.find(v) == sums.end() && !m.is_zero()) return false;
    return true;
  };
  return matches(row, source) && matches(col, target);
}

namespace detail {

WassersteinResult wasserstein_scaled(const Graph& g, const ProbabilityMeasure& mu1,
                                     const ProbabilityMeasure& mu2, long extra_scale) {
  require_valid_measure(mu1, "source");
  require_valid_measure(mu2, "target");
  ScaledSolution sol = solve_transport(g, mu1, mu2, extra_scale);
  WassersteinResult res;
  res.value = Rational(sol.cost, sol.scale);
  res.plan.source = mu1;
  res.plan.target = mu2;
  for (auto [u, v, f] : sol.flows) res.plan.flow[{u, v}] = Rational(f, sol.scale);
  return res;
}

}  // namespace detail

WassersteinResult wasserstein(const Graph& g, const ProbabilityMeasure& mu1,
                              const ProbabilityMeasure& mu2) {
  return detail::wasserstein_scaled(g, mu1, mu2, 1);
}

TransportPlan simple_optimal_plan(const Graph& g, int x, int y, const Rational& p) {
  if (!g.adjacent(x, y))
    throw ContractViolation("simple_optimal_plan requires an edge (x,y)");
  const int dx = g.degree(x), dy = g.degree(y);
  if (dx < dy)
    throw ContractViolation("simple_optimal_plan requires d_x >= d_y; swap the endpoints");
  if (p < Rational(1, 1 + dy) || p >= Rational(1))
    throw ContractViolation("simple_optimal_plan requires p in [1/(1+d_y), 1), got " + p.str());

  const ProbabilityMeasure mux = idleness_measure(g, x, p);
  const ProbabilityMeasure muy = idleness_measure(g, y, p);

  TransportPlan plan;
  plan.source = mux;
  plan.target = muy;

  // Fixed part: the full diagonal plus the pinned (x,y) entry.
  ProbabilityMeasure residual_supply = mux, residual_demand = muy;
  auto consume = [](ProbabilityMeasure& mu, int v, const Rational& amount) {
    Rational left = mu.at(v) - amount;
    if (left.sign() < 0)
      throw InternalError("simple_optimal_plan: fixed entries exceed a marginal");
    if (left.is_zero())
      mu.mass.erase(v);
    else
      mu.mass[v] = left;
  };
  for (const auto& [v, m] : mux.mass) {
    Rational diag = std::min(m, muy.at(v));
    if (diag.sign() > 0) {
      plan.flow[{v, v}] = diag;
      consume(residual_supply, v, diag);
      consume(residual_demand, v, diag);
    }
  }
  const Rational pin = p - (Rational(1) - p) / Rational(dy);
  if (pin.sign() > 0) {
    plan.flow[{x, y}] = pin;
    consume(residual_supply, x, pin);
    consume(residual_demand, y, pin);
  }

  // Route the leftover optimally.
  if (!residual_supply.mass.empty()) {
    ScaledSolution sol = solve_transport(g, residual_supply, residual_demand, 1);
    for (auto [u, v, f] : sol.flows) plan.flow[{u, v}] += Rational(f, sol.scale);
  } else if (!residual_demand.mass.empty()) {
    throw InternalError("simple_optimal_plan: unbalanced residual");
  }

  // The constrained optimum must coincide with the unconstrained one.
  const Rational w = wasserstein(g, mux, muy).value;
  if (plan.cost(g) != w)
    throw InternalError("simple_optimal_plan: constrained cost " + plan.cost(g).str() +
                        " differs from optimum " + w.str());
  return plan;
}

Rational plan_m2(const TransportPlan& plan, const Graph& g) {
  Rational m2;
  for (const auto& [uv, amount] : plan.flow)
    if (g.hop(uv.first, uv.second) == 2) m2 += amount;
  return m2;
}

std::vector<ExchangeViolation> check_exchange_inequality(const TransportPlan& plan,
                                                         const Graph& g) {
  std::vector<ExchangeViolation> out;
  std::vector<std::pair<int, int>> entries;
  entries.reserve(plan.flow.size());
  for (const auto& [uv, amount] : plan.flow)
    if (amount.sign() > 0) entries.push_back(uv);
  for (std::size_t i = 0; i < entries.size(); ++i) {
    for (std::size_t j = i + 1; j < entries.size(); ++j) {
      auto [u, v] = entries[i];
      auto [z, w] = entries[j];
      int duv = g.hop(u, v), dzw = g.hop(z, w), duw = g.hop(u, w), dzv = g.hop(z, v);
      if (duv == Graph::kUnreached || dzw == Graph::kUnreached ||
          duw == Graph::kUnreached || dzv == Graph::kUnreached)
        continue;
      if (duv + dzw > duw + dzv)
        out.push_back({u, v, z, w, duv + dzw, duw + dzv});
    }
  }
  return out;
}

}  // namespace curv
