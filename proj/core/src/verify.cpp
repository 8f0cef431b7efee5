#include "curv/verify.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <mutex>
#include <random>
#include <sstream>

#include "curv/curvature.hpp"
#include "curv/graph6.hpp"
#include "curv/measure.hpp"
#include "curv/patterns.hpp"
#include "curv/transport.hpp"
#include "parallel.hpp"

namespace curv {

namespace {

using Clock = std::chrono::steady_clock;

std::chrono::milliseconds since(Clock::time_point start) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start);
}

void sort_entries(std::vector<FailureEntry>& entries) {
  std::sort(entries.begin(), entries.end(), [](const FailureEntry& a, const FailureEntry& b) {
    if (a.graph6 != b.graph6) return a.graph6 < b.graph6;
    return a.detail < b.detail;
  });
}

// ---- labeled enumeration --------------------------------------------------

// Pair order matches the graph6 bit order: (0,1), (0,2), (1,2), (0,3), ...
std::vector<VertexPair> pair_order(int n) {
  std::vector<VertexPair> pairs;
  pairs.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) pairs.emplace_back(i, j);
  return pairs;
}

Graph graph_from_mask(int n, const std::vector<VertexPair>& pairs, std::uint64_t mask) {
  std::vector<VertexPair> edges;
  for (std::size_t b = 0; b < pairs.size(); ++b)
    if (mask & (1ULL << b)) edges.push_back(pairs[b]);
  return Graph::from_edges(n, edges);
}

bool is_p4(const Graph& g) {
  if (g.vertex_count() != 4 || g.edge_count() != 3) return false;
  int max_deg = 0;
  for (int v = 0; v < 4; ++v) max_deg = std::max(max_deg, g.degree(v));
  return max_deg == 2;  // with 3 edges on 4 vertices this forces the path
}

bool complement_c4_free(const Graph& g) {
  if (g.vertex_count() < 4) return true;
  return !contains_cycle_of_length(g.complement(), 4).has_value();
}

// ---- deterministic randomness ----------------------------------------------

// All sampling uses raw mt19937_64 draws with explicit arithmetic, so the
// sampled populations depend only on the seed, never on library
// distribution internals.
struct Rng {
  std::mt19937_64 engine;
  explicit Rng(std::uint64_t seed) : engine(seed) {}
  std::uint64_t next() { return engine(); }
  int uniform_int(int lo, int hi) {  // inclusive
    return lo + static_cast<int>(next() % static_cast<std::uint64_t>(hi - lo + 1));
  }
};

// floor(q * 2^64), clamped, as a Bernoulli acceptance threshold.
std::uint64_t bernoulli_threshold(const Rational& q) {
  if (q.sign() <= 0) return 0;
  if (q >= Rational(1)) return ~0ULL;
  mpz_class scaled = q.num();
  scaled <<= 64;
  scaled /= q.den();
  std::uint64_t out = 0;
  mpz_export(&out, nullptr, -1, sizeof(out), 0, 0, scaled.get_mpz_t());
  return out;
}

Graph random_graph(int n, std::uint64_t threshold, Rng& rng) {
  std::vector<VertexPair> edges;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i)
      if (rng.next() < threshold) edges.emplace_back(i, j);
  return Graph::from_edges(n, edges);
}

// Edge probability for complements in the theorem-2 sampler: aims for an
// expected K_{2,t} count of ~1/2 in G(n,q), i.e.
//   q = (0.5 / (C(n,2) * C(n-2,t)))^(1/(2t)),
// rounded onto a 1/4096 grid so the threshold arithmetic stays exact.
Rational tuned_complement_density(int t, int n) {
  auto log_choose = [](int m, int k) {
    return std::lgamma(m + 1.0) - std::lgamma(k + 1.0) - std::lgamma(m - k + 1.0);
  };
  double log_q = (std::log(0.5) - log_choose(n, 2) - log_choose(n - 2, t)) / (2.0 * t);
  double q = std::exp(log_q);
  long grid = std::lround(q * 4096.0);
  grid = std::clamp(grid, 1L, 2048L);
  return Rational(grid, 4096);
}

// ---- per-graph predicates ---------------------------------------------------

enum class Outcome { pass, fail, exception, not_applicable };

struct PredicateResult {
  Outcome outcome = Outcome::pass;
  std::string detail;
};

PredicateResult theorem1_predicate(const Graph& g) {
  if (!complement_c4_free(g)) return {Outcome::not_applicable, ""};
  if (g.edge_count() == 0) return {Outcome::pass, "vacuous (no edges)"};
  auto min = min_edge_curvature(g);
  if (min->kappa.sign() > 0) return {Outcome::pass, ""};
  std::string detail = "min kappa = " + min->kappa.str() + " at edge (" +
                       std::to_string(min->x) + "," + std::to_string(min->y) + ")";
  if (is_p4(g)) return {Outcome::exception, "4-path: " + detail};
  return {Outcome::fail, detail};
}

PredicateResult theorem2_predicate(const Graph& g, int t) {
  const int n = g.vertex_count();
  const long threshold = std::max<long>(static_cast<long>(t) * t - 2 * t + 2, 8L * t);
  if (n < threshold) return {Outcome::not_applicable, ""};
  if (contains_k2t(g.complement(), t)) return {Outcome::not_applicable, ""};
  if (g.edge_count() == 0) return {Outcome::pass, "vacuous (no edges)"};
  auto min = min_edge_curvature(g);
  if (min->kappa.sign() > 0) return {Outcome::pass, ""};
  return {Outcome::fail, "min kappa = " + min->kappa.str() + " at edge (" +
                             std::to_string(min->x) + "," + std::to_string(min->y) + ")"};
}

PredicateResult cushing_stone_predicate(const Graph& g) {
  if (g.vertex_count() < 3) return {Outcome::not_applicable, ""};
  bool lhs = g.connected();
  if (lhs) {
    for (auto [u, v] : g.edges()) {
      if (lly_edge(g, u, v).kappa < Rational(1)) {
        lhs = false;
        break;
      }
    }
  }
  const bool rhs = complement_is_matching(g);
  if (lhs == rhs) return {Outcome::pass, ""};
  std::ostringstream detail;
  detail << "curvature side " << (lhs ? "holds" : "fails") << " but complement max degree <= 1 "
         << (rhs ? "holds" : "fails");
  return {Outcome::fail, detail.str()};
}

PredicateResult sign_predicate(const Graph& g, StreamPredicate::Sign sign) {
  auto min = min_edge_curvature(g);
  if (!min) return {Outcome::not_applicable, "vacuous (no edges)"};
  const int s = min->kappa.sign();
  bool ok = false;
  switch (sign) {
    case StreamPredicate::Sign::positive: ok = s > 0; break;
    case StreamPredicate::Sign::nonnegative: ok = s >= 0; break;
    case StreamPredicate::Sign::zero: ok = s == 0; break;
    case StreamPredicate::Sign::nonpositive: ok = s <= 0; break;
    case StreamPredicate::Sign::negative: ok = s < 0; break;
  }
  if (ok) return {Outcome::pass, ""};
  return {Outcome::fail, "min kappa = " + min->kappa.str() + " at edge (" +
                             std::to_string(min->x) + "," + std::to_string(min->y) + ")"};
}

PredicateResult apply_predicate(const Graph& g, const StreamPredicate& p) {
  switch (p.kind) {
    case StreamPredicate::Kind::theorem1: return theorem1_predicate(g);
    case StreamPredicate::Kind::theorem2: return theorem2_predicate(g, p.t);
    case StreamPredicate::Kind::cushing_stone: return cushing_stone_predicate(g);
    case StreamPredicate::Kind::sign: return sign_predicate(g, p.sign);
  }
  throw InternalError("unhandled predicate kind");
}

// Shared reducer for parallel per-graph sweeps over an indexable population.
template <class GraphAt, class Predicate>
VerificationReport run_indexed_sweep(std::uint64_t count, int jobs, GraphAt&& graph_at,
                                     Predicate&& predicate) {
  VerificationReport report;
  report.examined = count;
  std::mutex merge;
  std::uint64_t applicable = 0;
  detail::parallel_for(count, jobs, [&](std::size_t i) {
    Graph g = graph_at(i);
    PredicateResult r = predicate(g);
    if (r.outcome == Outcome::not_applicable) return;
    std::scoped_lock lock(merge);
    ++applicable;
    if (r.outcome == Outcome::fail)
      report.failures.push_back({write_graph6(g), r.detail});
    else if (r.outcome == Outcome::exception)
      report.exceptions.push_back({write_graph6(g), r.detail});
  });
  report.applicable = applicable;
  sort_entries(report.failures);
  sort_entries(report.exceptions);
  return report;
}

}  // namespace

VerificationReport sweep_theorem1(int n, int jobs) {
  if (n < 1 || n > 7)
    throw InputError("sweep_theorem1 enumerates labeled graphs for 1 <= n <= 7; "
                     "use stream mode beyond that");
  const auto start = Clock::now();
  const std::vector<VertexPair> pairs = pair_order(n);
  const std::uint64_t count = 1ULL << pairs.size();
  VerificationReport report = run_indexed_sweep(
      count, jobs, [&](std::size_t mask) { return graph_from_mask(n, pairs, mask); },
      [](const Graph& g) { return theorem1_predicate(g); });
  report.suite = "theorem1";
  report.population =
      "all " + std::to_string(count) + " labeled graphs on " + std::to_string(n) + " vertices";
  report.elapsed = since(start);
  return report;
}

VerificationReport sweep_cushing_stone(int n, int jobs) {
  if (n < 3 || n > 7)
    throw InputError("sweep_cushing_stone enumerates labeled graphs for 3 <= n <= 7");
  const auto start = Clock::now();
  const std::vector<VertexPair> pairs = pair_order(n);
  const std::uint64_t count = 1ULL << pairs.size();
  VerificationReport report = run_indexed_sweep(
      count, jobs, [&](std::size_t mask) { return graph_from_mask(n, pairs, mask); },
      [](const Graph& g) { return cushing_stone_predicate(g); });
  report.suite = "cushing-stone";
  report.population =
      "all " + std::to_string(count) + " labeled graphs on " + std::to_string(n) + " vertices";
  report.elapsed = since(start);
  return report;
}

VerificationReport sweep_theorem2(int t, int n, int samples, std::uint64_t seed, int jobs,
                                  int max_rejections_per_sample) {
  if (t < 2) throw InputError("sweep_theorem2 requires t >= 2");
  const long threshold = std::max<long>(static_cast<long>(t) * t - 2 * t + 2, 8L * t);
  if (n < threshold)
    throw InputError("sweep_theorem2 requires n >= max(t^2-2t+2, 8t) = " +
                     std::to_string(threshold) + ", got n=" + std::to_string(n));
  if (samples < 0) throw InputError("sweep_theorem2: negative sample count");

  const auto start = Clock::now();
  const Rational q = tuned_complement_density(t, n);
  const std::uint64_t bern = bernoulli_threshold(q);

  // Sequential seeded generation keeps the population a pure function of
  // the seed; the curvature evaluation below runs in parallel.
  Rng rng(seed);
  std::vector<Graph> population;
  population.reserve(samples);
  while (static_cast<int>(population.size()) < samples) {
    int rejections = 0;
    for (;;) {
      Graph complement_sample = random_graph(n, bern, rng);
      if (!contains_k2t(complement_sample, t)) {
        population.push_back(complement_sample.complement());
        break;
      }
      if (++rejections > max_rejections_per_sample)
        throw SamplingExhausted("sweep_theorem2: more than " +
                                std::to_string(max_rejections_per_sample) +
                                " consecutive rejections at q=" + q.str());
    }
  }

  VerificationReport report = run_indexed_sweep(
      population.size(), jobs, [&](std::size_t i) { return population[i]; },
      [&](const Graph& g) {
        auto min = min_edge_curvature(g);
        if (!min) return PredicateResult{Outcome::pass, "vacuous (no edges)"};
        if (min->kappa.sign() > 0) return PredicateResult{Outcome::pass, ""};
        return PredicateResult{Outcome::fail,
                               "min kappa = " + min->kappa.str() + " at edge (" +
                                   std::to_string(min->x) + "," + std::to_string(min->y) + ")"};
      });
  report.suite = "theorem2";
  report.population = std::to_string(samples) + " random graphs on " + std::to_string(n) +
                      " vertices with K_{2," + std::to_string(t) +
                      "}-free complement (complement edge probability " + q.str() + ")";
  report.seed = seed;
  report.elapsed = since(start);
  return report;
}

StreamPredicate StreamPredicate::parse(std::string_view spec) {
  StreamPredicate p;
  if (spec == "theorem1") {
    p.kind = Kind::theorem1;
    return p;
  }
  if (spec == "cushing-stone") {
    p.kind = Kind::cushing_stone;
    return p;
  }
  if (spec.rfind("theorem2:", 0) == 0) {
    p.kind = Kind::theorem2;
    try {
      p.t = std::stoi(std::string(spec.substr(9)));
    } catch (const std::exception&) {
      throw InputError("predicate: cannot parse t in '" + std::string(spec) + "'");
    }
    if (p.t < 2) throw InputError("predicate theorem2 requires t >= 2");
    return p;
  }
  if (spec.rfind("sign:", 0) == 0) {
    p.kind = Kind::sign;
    std::string_view s = spec.substr(5);
    if (s == "positive") p.sign = Sign::positive;
    else if (s == "nonnegative") p.sign = Sign::nonnegative;
    else if (s == "zero") p.sign = Sign::zero;
    else if (s == "nonpositive") p.sign = Sign::nonpositive;
    else if (s == "negative") p.sign = Sign::negative;
    else throw InputError("predicate: unknown sign '" + std::string(s) + "'");
    return p;
  }
  throw InputError("unknown predicate '" + std::string(spec) +
                   "'; expected theorem1 | theorem2:<t> | cushing-stone | sign:<cmp>");
}

std::string StreamPredicate::describe() const {
  switch (kind) {
    case Kind::theorem1: return "theorem1";
    case Kind::theorem2: return "theorem2:" + std::to_string(t);
    case Kind::cushing_stone: return "cushing-stone";
    case Kind::sign:
      switch (sign) {
        case Sign::positive: return "sign:positive";
        case Sign::nonnegative: return "sign:nonnegative";
        case Sign::zero: return "sign:zero";
        case Sign::nonpositive: return "sign:nonpositive";
        case Sign::negative: return "sign:negative";
      }
  }
  throw InternalError("unhandled predicate kind");
}

VerificationReport sweep_stream(std::istream& lines, const StreamPredicate& predicate,
                                int jobs) {
  const auto start = Clock::now();
  std::vector<std::string> records;
  std::vector<std::size_t> line_numbers;
  std::string line;
  for (std::size_t no = 1; std::getline(lines, line); ++no) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    records.push_back(line);
    line_numbers.push_back(no);
  }

  VerificationReport report;
  report.suite = "stream";
  report.population = "graph6 stream, predicate " + predicate.describe();

  std::mutex merge;
  std::uint64_t examined = 0, applicable = 0;
  detail::parallel_for(records.size(), jobs, [&](std::size_t i) {
    Graph g;
    try {
      g = parse_graph6(records[i]);
    } catch (const ParseError& e) {
      std::scoped_lock lock(merge);
      report.parse_failures.push_back({line_numbers[i], e.what()});
      return;
    }
    PredicateResult r = apply_predicate(g, predicate);
    std::scoped_lock lock(merge);
    ++examined;
    if (r.outcome == Outcome::not_applicable) return;
    ++applicable;
    if (r.outcome == Outcome::fail)
      report.failures.push_back({write_graph6(g), r.detail});
    else if (r.outcome == Outcome::exception)
      report.exceptions.push_back({write_graph6(g), r.detail});
  });
  report.examined = examined;
  report.applicable = applicable;
  sort_entries(report.failures);
  sort_entries(report.exceptions);
  std::sort(report.parse_failures.begin(), report.parse_failures.end(),
            [](const StreamParseFailure& a, const StreamParseFailure& b) { return a.line < b.line; });
  report.elapsed = since(start);
  return report;
}

VerificationReport sweep_internal_lemmas(const LemmaSweepConfig& config) {
  if (config.samples < 0) throw InputError("sweep_internal_lemmas: negative sample count");
  if (config.n_min < 2 || config.n_max < config.n_min)
    throw InputError("sweep_internal_lemmas: need 2 <= n_min <= n_max");
  const auto start = Clock::now();

  Rng rng(config.seed);
  const std::uint64_t bern = bernoulli_threshold(config.edge_prob);
  std::vector<Graph> population;
  population.reserve(config.samples);
  for (int i = 0; i < config.samples; ++i)
    population.push_back(random_graph(rng.uniform_int(config.n_min, config.n_max), bern, rng));

  const Rational half(1, 2);
  VerificationReport report = run_indexed_sweep(
      population.size(), config.jobs, [&](std::size_t i) { return population[i]; },
      [&](const Graph& g) -> PredicateResult {
        std::ostringstream bad;
        for (auto [u, v] : g.edges()) {
          // Orient so the higher-degree endpoint plays x.
          int x = u, y = v;
          if (g.degree(x) < g.degree(y)) std::swap(x, y);
          const CurvatureResult primal = lly_edge(g, x, y);
          const Rational w = Rational(1) - primal.kappa_p;

          TransportPlan simple;
          try {
            simple = simple_optimal_plan(g, x, y, half);
          } catch (const InternalError& e) {
            bad << "(i) simple plan mismatch at (" << x << "," << y << "): " << e.what() << "; ";
            continue;
          }
          if (simple.cost(g) != w)
            bad << "(i) simple plan cost " << simple.cost(g) << " != W " << w << " at (" << x
                << "," << y << "); ";
          if (!check_exchange_inequality(primal.plan_witness, g).empty())
            bad << "(ii) exchange inequality violated at (" << x << "," << y << "); ";
          if (lower_bound_lemma32(g, x, y) > primal.kappa)
            bad << "(iii) closed-form bound exceeds kappa at (" << x << "," << y << "); ";
          if (auto bound = lower_bound_lemma33(g, x, y, simple, half); bound && *bound > primal.kappa)
            bad << "(iv) m2 bound " << bound->str() << " exceeds kappa " << primal.kappa.str()
                << " at (" << x << "," << y << "); ";
          if (corollary34_certificate(g, x, y, simple) && primal.kappa.sign() <= 0)
            bad << "(v) certificate true but kappa = " << primal.kappa.str() << " at (" << x
                << "," << y << "); ";
          if (lly_edge_dual(g, x, y).first != primal.kappa)
            bad << "(vi) dual disagrees with primal at (" << x << "," << y << "); ";
        }
        std::string detail = bad.str();
        if (detail.empty()) return {Outcome::pass, ""};
        return {Outcome::fail, detail};
      });
  report.suite = "lemmas";
  report.population = std::to_string(config.samples) + " Erdos-Renyi graphs, n in [" +
                      std::to_string(config.n_min) + "," + std::to_string(config.n_max) +
                      "], edge probability " + config.edge_prob.str();
  report.seed = config.seed;
  report.elapsed = since(start);
  return report;
}

}  // namespace curv
