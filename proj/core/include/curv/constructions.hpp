#pragma once

#include <span>
#include <string_view>

#include "curv/curvature.hpp"
#include "curv/graph.hpp"
#include "curv/rational.hpp"

namespace curv {

// Block sizes of the five-block extremal family: vertex set
// {x, y} ⊔ A ⊔ B ⊔ C ⊔ D with |A|=a, |B|=b, |C|=c, |D|=d.
struct SharpnessParams {
  int a = 0;
  int b = 0;
  int c = 0;
  int d = 0;
  int vertex_count() const { return a + b + c + d + 2; }
};

// The generated graph with its distinguished edge and block layout.
// Canonical vertex order: x=0, y=1, then A, B, C, D contiguously.
struct SharpnessGraph {
  Graph graph;
  int x = 0;
  int y = 1;
  SharpnessParams params;
  std::pair<int, int> block_a, block_b, block_c, block_d;  // [first, last) ranges
};

// Edges: xy; x ~ A ∪ B with A ∪ B a clique; y ~ C with C a clique; the
// complete join B–C; D ~ A ∪ B ∪ C with D a clique. Degrees: d_x = 1+a+b,
// d_y = 1+c.
SharpnessGraph sharpness_graph(const SharpnessParams& p);

// Analytic curvature upper bound (1-a)/(a+b+1) + 1/(c+1) for the edge xy,
// realized by the three-level witness of sharpness_witness().
Rational sharpness_upper_bound(const SharpnessParams& p);

// The staircase function restricted to N(x) ∪ N(y): -1 on A, 0 on {x} ∪ B,
// +1 on {y} ∪ C. Always feasible; evaluates to sharpness_upper_bound.
LipschitzWitness sharpness_witness(const SharpnessGraph& sg);

// a = ceil(n/2), b = floor(n/2)-3, c = 1, d = 0. Requires n >= 8. The
// resulting bound is <= 0 and every cycle of the complement has length 4.
SharpnessParams preset_c4(int n);

// a = c = t-2, b = n-3t+3, d = t-1. Requires t >= 3 and n >= 3t-2. The
// complement contains no K_{2,t}; the bound is <= 0 exactly when
// n <= t^2 - 2t + 1.
SharpnessParams preset_k2t(int t, int n);

Graph path_graph(int n);
Graph cycle_graph(int n);
Graph complete_graph(int n);
Graph complete_bipartite_graph(int s, int t);
// K_n minus the m disjoint edges (0,1), (2,3), ..., (2m-2, 2m-1).
Graph complete_minus_matching(int n, int m);

// Name-based dispatcher for the families above: "path n", "cycle n",
// "complete n", "complete-bipartite s t", "complete-minus-matching n m".
Graph standard_family(std::string_view name, std::span<const int> params);

}  // namespace curv
