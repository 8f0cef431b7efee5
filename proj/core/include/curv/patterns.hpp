#pragma once

#include <optional>
#include <variant>
#include <vector>

#include "curv/graph.hpp"

namespace curv {

// Subgraph (not induced) semantics throughout: a located pattern only needs
// its own edges present; other pairs are unconstrained.

// A length-k cycle as a vertex sequence v0 v1 ... v{k-1} (closing edge
// implied), if one exists. DFS over partial paths with canonical-start
// symmetry breaking; intended for desk-scale n. Requires 3 <= k <= n.
std::optional<std::vector<int>> contains_cycle_of_length(const Graph& g, int k);

struct K2tWitness {
  int u = -1;
  int v = -1;
  std::vector<int> common;  // t common neighbors of u and v
};

// A K_{2,t} subgraph: two vertices (adjacent or not) with at least t common
// neighbors. Scans all pairs. Requires t >= 1.
std::optional<K2tWitness> contains_k2t(const Graph& g, int t);

struct KstWitness {
  std::vector<int> side_s;
  std::vector<int> side_t;
};

// A K_{s,t} subgraph via enumeration of s-subsets with common-neighborhood
// counting. Requires 1 <= s <= t and s <= 4 (combinatorial guard).
std::optional<KstWitness> contains_kst(const Graph& g, int s, int t);

// True iff the complement has maximum degree <= 1, i.e. g is a complete
// graph minus a matching.
bool complement_is_matching(const Graph& g);

// Explicit bipartite structure: left side A of size `left`, right side B of
// size `right`, adj[a] lists the B-neighbors of a in ascending order.
struct Bipartite {
  int left = 0;
  int right = 0;
  std::vector<std::vector<int>> adj;
};

struct AMatching {
  std::vector<int> match_of;  // size left, B-index matched to each A-vertex
};
struct HallViolation {
  std::vector<int> subset;  // S ⊆ A with |N(S)| < |S|
};

// An A-saturating matching when one exists, otherwise a Hall-violating
// subset found from the alternating-reachability set of an unmatched
// A-vertex. Exactly one of the two alternatives is returned.
std::variant<AMatching, HallViolation> hall_matching(const Bipartite& b);

// CLI-facing query form of the predicates above.
struct PatternQuery {
  enum class Kind { cycle, complete_bipartite };
  enum class Target { graph, complement };
  Kind kind = Kind::cycle;
  Target target = Target::graph;
  int k = 0;  // cycle length
  int s = 0, t = 0;
};

struct PatternWitness {
  // One part for a cycle, two parts (side_s, side_t) for K_{s,t}.
  std::vector<std::vector<int>> parts;
};

std::optional<PatternWitness> find_pattern(const Graph& g, const PatternQuery& q);

}  // namespace curv
