#include "curv/measure.hpp"

namespace curv {

ProbabilityMeasure idleness_measure(const Graph& g, int x, const Rational& p) {
  if (p.sign() < 0 || p > Rational(1))
    throw InputError("idleness p must lie in [0,1], got " + p.str());
  const int d = g.degree(x);
  ProbabilityMeasure mu;
  if (p == Rational(1)) {
    mu.mass[x] = Rational(1);
    return mu;
  }
  if (d == 0)
    throw ContractViolation("idleness_measure: isolated vertex " + std::to_string(x) +
                            " with p < 1");
  if (p.sign() > 0) mu.mass[x] = p;
  const Rational share = (Rational(1) - p) / Rational(d);
  for (int w : g.neighbors(x)) mu.mass[w] = share;
  return mu;
}

}  // namespace curv
