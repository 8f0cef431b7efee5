#pragma once

// Independent reference implementations used only by tests. Each one takes a
// deliberately different algorithmic route from the library code it checks.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include <curv/graph.hpp>
#include <curv/measure.hpp>
#include <curv/rational.hpp>

namespace oracle {

// All-pairs distances by Floyd–Warshall (the library uses per-vertex BFS).
// -1 marks unreachable pairs.
std::vector<std::vector<int>> floyd_warshall(const curv::Graph& g);

// Exact Wasserstein value by Kantorovich duality: maximize sum f d(mu1-mu2)
// over integer-valued 1-Lipschitz f on the support union. The dual
// difference-constraint polytope has integral vertices for integer metrics,
// so enumerating the lattice points of its bounding box finds the optimum.
curv::Rational wasserstein_dual(const curv::Graph& g, const curv::ProbabilityMeasure& mu1,
                                const curv::ProbabilityMeasure& mu2);

// Exact Wasserstein value by primal vertex enumeration: every vertex of the
// transportation polytope is supported on a spanning tree of the bipartite
// support graph; enumerate them all and keep the cheapest feasible one.
// Exponential; intended for supports of size <= ~4.
curv::Rational wasserstein_vertex_enumeration(const curv::Graph& g,
                                              const curv::ProbabilityMeasure& mu1,
                                              const curv::ProbabilityMeasure& mu2);

// Existence of a length-k cycle by brute force over k-subsets and cyclic
// orders. Intended for n <= 8.
bool has_cycle_brute(const curv::Graph& g, int k);

// Lexicographically minimal graph6 string over all vertex relabelings;
// a brute-force isomorphism-class key for small n.
std::string canonical_graph6(const curv::Graph& g);

curv::Graph relabel(const curv::Graph& g, const std::vector<int>& perm);

// Erdős–Rényi sample with edge probability num/den.
curv::Graph er_graph(int n, int prob_num, int prob_den, std::mt19937_64& rng);

}  // namespace oracle
