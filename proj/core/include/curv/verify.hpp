#pragma once

#include <chrono>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "curv/graph.hpp"
#include "curv/rational.hpp"

namespace curv {

struct FailureEntry {
  std::string graph6;  // re-running this record standalone reproduces the failure
  std::string detail;
};

struct StreamParseFailure {
  std::size_t line = 0;  // 1-based
  std::string error;
};

// Outcome of one theorem-level sweep. Reports are deterministic functions
// of (suite, parameters, seed); failure and exception lists are sorted by
// graph6 string so the output is independent of worker count.
struct VerificationReport {
  std::string suite;
  std::string population;
  std::optional<std::uint64_t> seed;
  std::uint64_t examined = 0;    // graphs looked at
  std::uint64_t applicable = 0;  // graphs the predicate actually constrains
  std::vector<FailureEntry> failures;
  std::vector<FailureEntry> exceptions;  // allowed exceptional cases hit (e.g. P_4)
  std::vector<StreamParseFailure> parse_failures;
  std::chrono::milliseconds elapsed{0};

  bool pass() const { return failures.empty(); }
};

// Exhaustive labeled sweep, 1 <= n <= 7: every graph whose complement has no
// 4-cycle must have positive curvature on every edge, except the 4-path.
VerificationReport sweep_theorem1(int n, int jobs = 0);

// Sampled sweep: `samples` random graphs on n vertices whose complements are
// K_{2,t}-free (rejection sampling over sparse Erdős–Rényi complements) must
// all have positive curvature on every edge. Requires t >= 2 and
// n >= max(t^2-2t+2, 8t).
VerificationReport sweep_theorem2(int t, int n, int samples, std::uint64_t seed,
                                  int jobs = 0, int max_rejections_per_sample = 10000);

// Exhaustive labeled sweep, 3 <= n <= 7: (connected and every edge has
// kappa >= 1) holds exactly for the complete-minus-a-matching graphs
// (complement max degree <= 1).
VerificationReport sweep_cushing_stone(int n, int jobs = 0);

// Per-graph predicate for stream mode.
struct StreamPredicate {
  enum class Kind { theorem1, theorem2, cushing_stone, sign };
  enum class Sign { positive, nonnegative, zero, nonpositive, negative };
  Kind kind = Kind::theorem1;
  int t = 2;              // theorem2 only
  Sign sign = Sign::positive;  // sign check only

  // "theorem1" | "theorem2:<t>" | "cushing-stone" |
  // "sign:positive|nonnegative|zero|nonpositive|negative"
  static StreamPredicate parse(std::string_view spec);
  std::string describe() const;
};

// Applies a predicate to an externally enumerated graph6 stream, one record
// per line. Blank lines are skipped; malformed lines are recorded as parse
// failures and do not abort the sweep.
VerificationReport sweep_stream(std::istream& lines, const StreamPredicate& predicate,
                                int jobs = 0);

struct LemmaSweepConfig {
  int samples = 500;
  std::uint64_t seed = 0;
  int n_min = 4;
  int n_max = 9;
  Rational edge_prob{1, 2};
  int jobs = 0;
};

// Random-graph sweep of the internal transport machinery; per edge it
// checks: (i) the simple plan costs exactly the optimum, (ii) optimal plans
// satisfy the exchange inequality, (iii) the closed-form lower bound and
// (iv) the m2 lower bound never exceed kappa, (v) the positivity
// certificate implies kappa > 0, and (vi) the primal and dual routes agree.
VerificationReport sweep_internal_lemmas(const LemmaSweepConfig& config);

}  // namespace curv
