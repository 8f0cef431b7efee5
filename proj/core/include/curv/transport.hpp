#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "curv/graph.hpp"
#include "curv/measure.hpp"
#include "curv/rational.hpp"

namespace curv {

// Coupling of two measures: nonnegative joint masses whose row sums are the
// source masses and whose column sums are the target masses. Only positive
// entries are stored.
struct TransportPlan {
  ProbabilityMeasure source;
  ProbabilityMeasure target;
  std::map<std::pair<int, int>, Rational> flow;

  Rational mass_at(int u, int v) const {
    auto it = flow.find({u, v});
    return it == flow.end() ? Rational(0) : it->second;
  }
  // Sum of rho(u,v) * pi(u,v); requires all used pairs reachable.
  Rational cost(const Graph& g) const;
  bool marginals_valid() const;
};

struct WassersteinResult {
  Rational value;
  TransportPlan plan;
};

// Exact minimum transport cost between two measures with graph-distance
// costs, plus one optimal plan. Supplies are scaled to integers by the lcm
// of all mass denominators and solved by successive shortest paths with
// potentials, so the value is exact. Requires every cross-support pair to
// be at finite distance.
WassersteinResult wasserstein(const Graph& g, const ProbabilityMeasure& mu1,
                              const ProbabilityMeasure& mu2);

// A simple optimal plan between the idleness measures of an edge xy:
// pi(u,u) = min(mu_x(u), mu_y(u)) for every u and pi(x,y) = p - (1-p)/d_y,
// with the remaining mass routed optimally. Requires x ~ y, d_x >= d_y and
// p in [1/(1+d_y), 1). Its cost always equals the unconstrained optimum;
// a mismatch raises InternalError.
TransportPlan simple_optimal_plan(const Graph& g, int x, int y, const Rational& p);

// Total plan mass moved across distance exactly 2.
Rational plan_m2(const TransportPlan& plan, const Graph& g);

// One witness that a plan is not optimal: two positive entries that could be
// swapped at lower cost.
struct ExchangeViolation {
  int u, v, z, w;
  int lhs;  // rho(u,v) + rho(z,w)
  int rhs;  // rho(u,w) + rho(z,v)
};

// Diagnostic for the quadrilateral exchange inequality: for every two
// positive entries (u,v), (z,w) of an optimal plan,
// rho(u,v) + rho(z,w) <= rho(u,w) + rho(z,v). Returns all violating
// quadruples (empty for genuinely optimal plans). Pairs whose exchange
// route crosses components are skipped.
std::vector<ExchangeViolation> check_exchange_inequality(const TransportPlan& plan,
                                                         const Graph& g);

namespace detail {
// Consistency hook for tests: solve with the supply scale multiplied by
// extra_scale. The result must not depend on extra_scale.
WassersteinResult wasserstein_scaled(const Graph& g, const ProbabilityMeasure& mu1,
                                     const ProbabilityMeasure& mu2, long extra_scale);
}  // namespace detail

}  // namespace curv
