// curv: exact curvature computations, forbidden-subgraph checks, extremal
// constructions and theorem-level verification sweeps for finite simple
// graphs. Exit codes: 0 success/true/pass, 1 false/fail, 2 usage or input
// error.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include <curv/constructions.hpp>
#include <curv/curvature.hpp>
#include <curv/graph6.hpp>
#include <curv/patterns.hpp>
#include <curv/serialize.hpp>
#include <curv/verify.hpp>

namespace {

using json = nlohmann::ordered_json;

struct InputOpts {
  std::string g6;
  std::string g6_file;
  std::string edges_file;
};

void add_input_flags(CLI::App* cmd, InputOpts& in) {
  auto* g6 = cmd->add_option("--g6", in.g6, "graph6 record");
  auto* g6f = cmd->add_option("--g6-file", in.g6_file, "file with one graph6 record");
  auto* ef = cmd->add_option("--edges", in.edges_file, "edge-list file: 'n m' then 'u v' lines");
  g6->excludes(g6f)->excludes(ef);
  g6f->excludes(ef);
}

curv::Graph read_graph(const InputOpts& in) {
  if (!in.g6.empty()) return curv::parse_graph6(in.g6);
  if (!in.g6_file.empty()) {
    std::ifstream file(in.g6_file);
    if (!file) throw curv::InputError("cannot open " + in.g6_file);
    std::string line;
    while (std::getline(file, line))
      if (line.find_first_not_of(" \t\r") != std::string::npos) return curv::parse_graph6(line);
    throw curv::InputError("no graph6 record in " + in.g6_file);
  }
  if (!in.edges_file.empty()) {
    std::ifstream file(in.edges_file);
    if (!file) throw curv::InputError("cannot open " + in.edges_file);
    return curv::parse_edge_list(file);
  }
  std::string line;
  while (std::getline(std::cin, line))
    if (line.find_first_not_of(" \t\r") != std::string::npos) return curv::parse_graph6(line);
  throw curv::InputError("no graph on stdin (expected a graph6 record)");
}

// ---- curvature ---------------------------------------------------------------

struct CurvatureArgs {
  InputOpts in;
  std::vector<int> edge;
  bool all_edges = false;
  bool dual = false;
  std::string p = "1/2";
  std::string format = "text";
  int jobs = 0;
};

int run_curvature(const CurvatureArgs& args) {
  curv::Graph g = read_graph(args.in);
  const bool as_json = args.format == "json";

  if (args.all_edges) {
    auto table = curv::all_edge_curvatures(g, args.jobs);
    auto min = curv::min_edge_curvature(g);
    if (as_json) {
      json j;
      json edges = json::array();
      for (const auto& e : table)
        edges.push_back({{"x", e.x}, {"y", e.y}, {"kappa", e.kappa.str()}});
      j["edges"] = edges;
      j["min"] = min ? json{{"x", min->x}, {"y", min->y}, {"kappa", min->kappa.str()}}
                     : json(nullptr);
      std::cout << j.dump(2) << '\n';
    } else {
      for (const auto& e : table)
        std::cout << "(" << e.x << "," << e.y << ")  kappa = " << e.kappa << '\n';
      if (min)
        std::cout << "min kappa = " << min->kappa << " at edge (" << min->x << "," << min->y
                  << ")\n";
      else
        std::cout << "min kappa = vacuous (no edges)\n";
    }
    return 0;
  }

  if (args.edge.size() != 2)
    throw curv::InputError("specify --edge X Y or --all-edges");
  const int x = args.edge[0], y = args.edge[1];

  if (args.dual) {
    auto [kappa, witness] = curv::lly_edge_dual(g, x, y);
    if (as_json) {
      json j;
      j["kappa"] = kappa.str();
      j["dual_witness"] = json::parse(curv::to_json(witness));
      std::cout << j.dump(2) << '\n';
    } else {
      std::cout << "kappa = " << kappa << '\n' << "witness f:" << '\n';
      for (const auto& [v, f] : witness.values)
        std::cout << "  f(" << v << ") = " << f << '\n';
    }
    return 0;
  }

  curv::CurvatureResult r = curv::lly_edge_at(g, x, y, curv::Rational::parse(args.p));
  if (as_json) {
    std::cout << curv::to_json(r, 2) << '\n';
  } else {
    std::cout << "kappa = " << r.kappa << '\n';
    std::cout << "kappa_p = " << r.kappa_p << " (p = " << r.p_used << ")\n";
  }
  return 0;
}

// ---- check -------------------------------------------------------------------

struct CheckArgs {
  InputOpts in;
  bool c4_free_complement = false;
  int k2t_t = 0;
  std::vector<int> kst;
  bool complement_matching = false;
  std::string format = "text";
};

int run_check(const CheckArgs& args) {
  curv::Graph g = read_graph(args.in);
  std::string predicate;
  bool holds = false;
  std::optional<curv::PatternWitness> witness;

  if (args.c4_free_complement) {
    predicate = "complement has no 4-cycle";
    curv::PatternQuery q;
    q.kind = curv::PatternQuery::Kind::cycle;
    q.k = 4;
    q.target = curv::PatternQuery::Target::complement;
    witness = curv::find_pattern(g, q);
    holds = !witness.has_value();
  } else if (args.k2t_t > 0) {
    predicate = "complement has no K_{2," + std::to_string(args.k2t_t) + "}";
    curv::PatternQuery q;
    q.kind = curv::PatternQuery::Kind::complete_bipartite;
    q.s = 2;
    q.t = args.k2t_t;
    q.target = curv::PatternQuery::Target::complement;
    witness = curv::find_pattern(g, q);
    holds = !witness.has_value();
  } else if (args.kst.size() == 2) {
    predicate = "complement has no K_{" + std::to_string(args.kst[0]) + "," +
                std::to_string(args.kst[1]) + "}";
    curv::PatternQuery q;
    q.kind = curv::PatternQuery::Kind::complete_bipartite;
    q.s = args.kst[0];
    q.t = args.kst[1];
    q.target = curv::PatternQuery::Target::complement;
    witness = curv::find_pattern(g, q);
    holds = !witness.has_value();
  } else if (args.complement_matching) {
    predicate = "complement is a matching (max degree <= 1)";
    holds = curv::complement_is_matching(g);
    if (!holds) {
      curv::Graph comp = g.complement();
      for (int v = 0; v < comp.vertex_count(); ++v) {
        if (comp.degree(v) >= 2) {
          const auto& nb = comp.neighbors(v);
          witness = curv::PatternWitness{{{v}, {nb[0], nb[1]}}};
          break;
        }
      }
    }
  } else {
    throw curv::InputError(
        "choose one of --c4-free-complement, --k2t-free-complement, --kst, "
        "--complement-matching");
  }

  if (args.format == "json") {
    json j;
    j["predicate"] = predicate;
    j["holds"] = holds;
    j["witness"] = witness ? json::parse(curv::to_json(*witness)) : json(nullptr);
    std::cout << j.dump(2) << '\n';
  } else {
    std::cout << predicate << ": " << (holds ? "true" : "false") << '\n';
    if (witness) {
      std::cout << "witness:";
      for (const auto& part : witness->parts) {
        std::cout << " [";
        for (std::size_t i = 0; i < part.size(); ++i)
          std::cout << (i ? " " : "") << part[i];
        std::cout << "]";
      }
      std::cout << '\n';
    }
  }
  return holds ? 0 : 1;
}

// ---- construct ---------------------------------------------------------------

struct ConstructArgs {
  std::string family;
  std::vector<int> params;
  std::vector<int> preset_c4;
  std::vector<int> preset_k2t;
  std::vector<int> blocks;
  std::string emit = "g6";
  bool bound = false;
};

int run_construct(const ConstructArgs& args) {
  curv::Graph g;
  std::optional<curv::Rational> bound;

  if (args.family == "sharpness") {
    curv::SharpnessParams p;
    int sources = (!args.preset_c4.empty()) + (!args.preset_k2t.empty()) + (!args.blocks.empty());
    if (sources != 1)
      throw curv::InputError(
          "sharpness needs exactly one of --preset-c4 N, --preset-k2t T N, --params A B C D");
    if (!args.preset_c4.empty()) {
      p = curv::preset_c4(args.preset_c4[0]);
    } else if (!args.preset_k2t.empty()) {
      p = curv::preset_k2t(args.preset_k2t[0], args.preset_k2t[1]);
    } else {
      p = curv::SharpnessParams{args.blocks[0], args.blocks[1], args.blocks[2], args.blocks[3]};
    }
    g = curv::sharpness_graph(p).graph;
    if (args.bound) bound = curv::sharpness_upper_bound(p);
  } else {
    if (args.bound)
      throw curv::InputError("--bound applies to the sharpness family only");
    g = curv::standard_family(args.family, args.params);
  }

  if (args.emit == "edges")
    std::cout << curv::write_edge_list(g);
  else if (args.emit == "g6")
    std::cout << curv::write_graph6(g) << '\n';
  else
    throw curv::InputError("--emit expects g6 or edges");
  if (bound) std::cout << "bound = " << *bound << '\n';
  return 0;
}

// ---- verify ------------------------------------------------------------------

struct VerifyArgs {
  std::string suite;
  int n = 0;
  int t = 2;
  int samples = -1;
  std::uint64_t seed = 0;
  int jobs = 0;
  int max_rejections = 10000;
  int n_min = 4;
  int n_max = 9;
  std::string edge_prob = "1/2";
  std::string predicate = "theorem1";
  InputOpts in;
  std::string format = "text";
};

int run_verify(const VerifyArgs& args) {
  curv::VerificationReport report;
  if (args.suite == "theorem1") {
    if (args.n == 0) throw curv::InputError("verify theorem1 requires --n");
    report = curv::sweep_theorem1(args.n, args.jobs);
  } else if (args.suite == "theorem2") {
    if (args.n == 0) throw curv::InputError("verify theorem2 requires --n and --t");
    report = curv::sweep_theorem2(args.t, args.n, args.samples < 0 ? 200 : args.samples,
                                  args.seed, args.jobs, args.max_rejections);
  } else if (args.suite == "cushing-stone") {
    if (args.n == 0) throw curv::InputError("verify cushing-stone requires --n");
    report = curv::sweep_cushing_stone(args.n, args.jobs);
  } else if (args.suite == "lemmas") {
    curv::LemmaSweepConfig config;
    config.samples = args.samples < 0 ? 500 : args.samples;
    config.seed = args.seed;
    config.n_min = args.n_min;
    config.n_max = args.n_max;
    config.edge_prob = curv::Rational::parse(args.edge_prob);
    config.jobs = args.jobs;
    report = curv::sweep_internal_lemmas(config);
  } else if (args.suite == "stream") {
    curv::StreamPredicate predicate = curv::StreamPredicate::parse(args.predicate);
    if (!args.in.g6_file.empty()) {
      std::ifstream file(args.in.g6_file);
      if (!file) throw curv::InputError("cannot open " + args.in.g6_file);
      report = curv::sweep_stream(file, predicate, args.jobs);
    } else {
      report = curv::sweep_stream(std::cin, predicate, args.jobs);
    }
  } else {
    throw curv::InputError("unknown suite '" + args.suite +
                           "'; expected theorem1 | theorem2 | cushing-stone | lemmas | stream");
  }

  if (args.format == "json")
    std::cout << curv::to_json(report) << '\n';
  else
    std::cout << curv::to_text(report);
  return report.pass() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact Lin-Lu-Yau / p-Ollivier curvature toolkit"};
  app.require_subcommand(1);

  CurvatureArgs curvature_args;
  auto* curvature = app.add_subcommand("curvature", "edge curvature, exact rationals");
  add_input_flags(curvature, curvature_args.in);
  curvature->add_option("--edge", curvature_args.edge, "edge endpoints x y")->expected(2);
  curvature->add_flag("--all-edges", curvature_args.all_edges, "per-edge table plus minimum");
  curvature->add_flag("--dual", curvature_args.dual,
                      "use the Laplacian dual route and print the witness");
  curvature->add_option("--p", curvature_args.p, "idleness parameter (rational)", true);
  curvature->add_option("--jobs", curvature_args.jobs, "worker threads for --all-edges (0 = all)");
  curvature->add_option("--format", curvature_args.format, "text | json", true);

  CheckArgs check_args;
  auto* check = app.add_subcommand("check", "forbidden-subgraph predicates on the complement");
  add_input_flags(check, check_args.in);
  check->add_flag("--c4-free-complement", check_args.c4_free_complement,
                  "complement contains no 4-cycle");
  check->add_option("--k2t-free-complement", check_args.k2t_t,
                    "complement contains no K_{2,t}");
  check->add_option("--kst", check_args.kst, "complement contains no K_{s,t}")->expected(2);
  check->add_flag("--complement-matching", check_args.complement_matching,
                  "complement is a matching");
  check->add_option("--format", check_args.format, "text | json", true);

  ConstructArgs construct_args;
  auto* construct = app.add_subcommand("construct", "generate named graph families");
  construct->add_option("family", construct_args.family,
                        "path | cycle | complete | complete-bipartite | "
                        "complete-minus-matching | sharpness")
      ->required();
  construct->add_option("params", construct_args.params, "family parameters");
  construct->add_option("--preset-c4", construct_args.preset_c4,
                        "sharpness preset for the 4-cycle result: n")
      ->expected(1);
  construct->add_option("--preset-k2t", construct_args.preset_k2t,
                        "sharpness preset for the K_{2,t} result: t n")
      ->expected(2);
  construct->add_option("--params", construct_args.blocks, "sharpness block sizes a b c d")
      ->expected(4);
  construct->add_option("--emit", construct_args.emit, "g6 | edges", true);
  construct->add_flag("--bound", construct_args.bound,
                      "print the analytic curvature upper bound (sharpness)");

  VerifyArgs verify_args;
  auto* verify = app.add_subcommand("verify", "theorem-level verification sweeps");
  verify->add_option("suite", verify_args.suite,
                     "theorem1 | theorem2 | cushing-stone | lemmas | stream")
      ->required();
  verify->add_option("--n", verify_args.n, "vertex count (exhaustive suites / theorem2)");
  verify->add_option("--t", verify_args.t, "forbidden K_{2,t} parameter (theorem2)");
  verify->add_option("--samples", verify_args.samples, "sample count (sampling suites)");
  verify->add_option("--seed", verify_args.seed, "64-bit sampling seed", true);
  verify->add_option("--jobs", verify_args.jobs, "worker threads (0 = all)");
  verify->add_option("--max-rejections", verify_args.max_rejections,
                     "rejection ceiling per sample (theorem2)", true);
  verify->add_option("--n-min", verify_args.n_min, "smallest sampled graph (lemmas)", true);
  verify->add_option("--n-max", verify_args.n_max, "largest sampled graph (lemmas)", true);
  verify->add_option("--edge-prob", verify_args.edge_prob, "sampling edge probability (lemmas)",
                     true);
  verify->add_option("--predicate", verify_args.predicate,
                     "stream predicate: theorem1 | theorem2:<t> | cushing-stone | sign:<cmp>",
                     true);
  verify->add_option("--g6-file", verify_args.in.g6_file, "graph6 stream file (stream suite)");
  verify->add_option("--format", verify_args.format, "text | json", true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << '\n';
    return 2;
  }

  try {
    if (curvature->parsed()) return run_curvature(curvature_args);
    if (check->parsed()) return run_check(check_args);
    if (construct->parsed()) return run_construct(construct_args);
    if (verify->parsed()) return run_verify(verify_args);
    throw curv::InputError("no subcommand selected");
  } catch (const curv::SamplingExhausted& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const curv::InternalError& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
}
