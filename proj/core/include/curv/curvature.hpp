#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "curv/graph.hpp"
#include "curv/rational.hpp"
#include "curv/transport.hpp"

namespace curv {

// Integer-valued function on N(x) ∪ N(y) anchored at f(x)=0, f(y)=1 and
// 1-Lipschitz with respect to hop distance. Any feasible witness upper
// bounds the edge curvature via the Laplacian difference it evaluates to.
struct LipschitzWitness {
  int x = -1;
  int y = -1;
  std::map<int, int> values;
};

// Validates the witness (exact domain, anchors, Lipschitz) and returns
// Delta f(x) - Delta f(y), where Delta f(v) = (1/d_v) sum_{w~v} (f(w)-f(v)).
// Infeasible witnesses raise ContractViolation.
Rational evaluate_witness(const Graph& g, const LipschitzWitness& w);

struct CurvatureResult {
  Rational kappa;    // normalized curvature, kappa_p / (1 - p_used)
  Rational kappa_p;  // p-Ollivier curvature at p_used
  Rational p_used;
  TransportPlan plan_witness;
  std::optional<LipschitzWitness> dual_witness;
};

// Edge curvature through the transport problem at idleness p = 1/2, which
// is valid for every edge. Exact rational output.
CurvatureResult lly_edge(const Graph& g, int x, int y);

// Same at a caller-chosen idleness. Requires x ~ y and
// p in [1/(max(d_x,d_y)+1), 1) so that the normalization identity applies.
CurvatureResult lly_edge_at(const Graph& g, int x, int y, const Rational& p);

// Independent dual route: minimize Delta f(x) - Delta f(y) over integer
// 1-Lipschitz f on N(x) ∪ N(y) with f(y) - f(x) = 1, by depth-first
// enumeration with Lipschitz constraint propagation. Equals lly_edge
// exactly; used as the oracle of record for cross-validation.
std::pair<Rational, LipschitzWitness> lly_edge_dual(const Graph& g, int x, int y);

// Closed-form lower bound from the edge-neighborhood sizes (endpoints are
// oriented internally so that d_x >= d_y):
//   (2|N_xy|+2)/(|N_xy|+|A_x|+1) - (|N_xy|+2|A_y|)/(|N_xy|+|A_y|+1).
Rational lower_bound_lemma32(const Graph& g, int x, int y);

// Lower bound 1/d_y + (|N_xy|+1)/d_x - m2/(1-p) from a simple plan with
// pi(x,y) = p - (1-p)/d_y. Requires d_x >= d_y and that exact plan shape.
// Returns nothing when the hypothesis fails (some positive-mass pair
// u in A_x, v in A_y at distance > 2).
std::optional<Rational> lower_bound_lemma33(const Graph& g, int x, int y,
                                            const TransportPlan& plan, const Rational& p);

// Positivity certificate: true iff the plan has the simple shape above and
// every positive-mass pair u in A_x, v in A_y ∪ N_xy sits at distance 1.
// True certifies kappa > 0 without solving.
bool corollary34_certificate(const Graph& g, int x, int y, const TransportPlan& plan);

struct EdgeCurvature {
  Rational kappa;
  int x = -1;
  int y = -1;
};

// Minimum edge curvature with its argmin edge (lexicographic tie-break);
// nothing for edgeless graphs (the quantification is vacuous).
std::optional<EdgeCurvature> min_edge_curvature(const Graph& g);

// Curvature of every edge, in lexicographic edge order. jobs = 0 uses all
// hardware threads; the output order is independent of jobs.
std::vector<EdgeCurvature> all_edge_curvatures(const Graph& g, int jobs = 1);

}  // namespace curv
