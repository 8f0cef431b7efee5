#pragma once

#include <map>
#include <vector>

#include "curv/graph.hpp"
#include "curv/rational.hpp"

namespace curv {

// Probability measure on graph vertices with exact rational masses.
// Canonical form keeps only positive-mass vertices, so support() is
// exactly the key set.
struct ProbabilityMeasure {
  std::map<int, Rational> mass;

  Rational at(int v) const {
    auto it = mass.find(v);
    return it == mass.end() ? Rational(0) : it->second;
  }
  Rational total() const {
    Rational t;
    for (const auto& [v, m] : mass) t += m;
    return t;
  }
  std::vector<int> support() const {
    std::vector<int> s;
    s.reserve(mass.size());
    for (const auto& [v, m] : mass) s.push_back(v);
    return s;
  }
  bool is_valid() const {
    for (const auto& [v, m] : mass)
      if (m.sign() <= 0) return false;
    return total() == Rational(1);
  }
};

// The vertex measure with idleness p: mass p at x, (1-p)/deg(x) at each
// neighbor. Requires 0 <= p <= 1, and deg(x) >= 1 whenever p < 1.
ProbabilityMeasure idleness_measure(const Graph& g, int x, const Rational& p);

}  // namespace curv
