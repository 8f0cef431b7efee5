#include "curv/serialize.hpp"

#include <iomanip>
#include <sstream>

#include <nlohmann/json.hpp>

namespace curv {

namespace {

using json = nlohmann::ordered_json;

std::string dump(const json& j, int indent) { return j.dump(indent); }

json measure_json(const ProbabilityMeasure& mu) {
  json entries = json::array();
  for (const auto& [v, m] : mu.mass) entries.push_back(json::array({v, m.str()}));
  return entries;
}

json plan_json(const TransportPlan& plan) {
  json j;
  j["source"] = measure_json(plan.source);
  j["target"] = measure_json(plan.target);
  json entries = json::array();
  for (const auto& [uv, amount] : plan.flow)
    entries.push_back(json::array({uv.first, uv.second, amount.str()}));
  j["entries"] = entries;
  return j;
}

json witness_json(const LipschitzWitness& w) {
  json j;
  j["x"] = w.x;
  j["y"] = w.y;
  json values = json::array();
  for (const auto& [v, f] : w.values) values.push_back(json::array({v, f}));
  j["values"] = values;
  return j;
}

}  // namespace

std::string to_json(const ProbabilityMeasure& mu, int indent) {
  return dump(measure_json(mu), indent);
}

std::string to_json(const TransportPlan& plan, int indent) {
  return dump(plan_json(plan), indent);
}

std::string to_json(const LipschitzWitness& w, int indent) {
  return dump(witness_json(w), indent);
}

std::string to_json(const CurvatureResult& r, int indent) {
  json j;
  j["kappa"] = r.kappa.str();
  j["kappa_p"] = r.kappa_p.str();
  j["p"] = r.p_used.str();
  j["plan"] = plan_json(r.plan_witness);
  j["dual_witness"] = r.dual_witness ? witness_json(*r.dual_witness) : json(nullptr);
  return dump(j, indent);
}

std::string to_json(const PatternWitness& w, int indent) {
  json parts = json::array();
  for (const auto& part : w.parts) parts.push_back(part);
  json j;
  j["parts"] = parts;
  return dump(j, indent);
}

std::string to_json(const VerificationReport& report, int indent) {
  json j;
  j["suite"] = report.suite;
  j["population"] = report.population;
  j["seed"] = report.seed ? json(std::to_string(*report.seed)) : json(nullptr);
  j["examined"] = report.examined;
  j["applicable"] = report.applicable;
  json failures = json::array();
  for (const auto& f : report.failures)
    failures.push_back({{"graph6", f.graph6}, {"detail", f.detail}});
  j["failures"] = failures;
  json exceptions = json::array();
  for (const auto& e : report.exceptions)
    exceptions.push_back({{"graph6", e.graph6}, {"detail", e.detail}});
  j["exceptions"] = exceptions;
  json parse_failures = json::array();
  for (const auto& p : report.parse_failures)
    parse_failures.push_back({{"line", p.line}, {"error", p.error}});
  j["parse_failures"] = parse_failures;
  j["verdict"] = report.pass() ? "pass" : "fail";
  return dump(j, indent);
}

std::string to_text(const VerificationReport& report, std::size_t max_listed) {
  std::ostringstream out;
  auto row = [&out](const char* label, const std::string& value) {
    out << std::left << std::setw(16) << label << value << '\n';
  };
  row("suite:", report.suite);
  row("population:", report.population);
  if (report.seed) row("seed:", std::to_string(*report.seed));
  row("examined:", std::to_string(report.examined));
  row("applicable:", std::to_string(report.applicable));
  row("exceptions:", std::to_string(report.exceptions.size()));
  row("failures:", std::to_string(report.failures.size()));
  if (!report.parse_failures.empty())
    row("parse errors:", std::to_string(report.parse_failures.size()));
  {
    std::ostringstream t;
    t << std::fixed << std::setprecision(3) << report.elapsed.count() / 1000.0 << " s";
    row("elapsed:", t.str());
  }
  row("verdict:", report.pass() ? "PASS" : "FAIL");

  auto list = [&](const char* label, const std::vector<FailureEntry>& entries) {
    if (entries.empty()) return;
    out << label << '\n';
    std::size_t shown = 0;
    for (const auto& e : entries) {
      if (shown++ == max_listed) {
        out << "  ... (" << entries.size() - max_listed << " more)\n";
        break;
      }
      out << "  " << e.graph6 << "  " << e.detail << '\n';
    }
  };
  list("exception list:", report.exceptions);
  list("failure list:", report.failures);
  if (!report.parse_failures.empty()) {
    out << "parse failures:" << '\n';
    std::size_t shown = 0;
    for (const auto& p : report.parse_failures) {
      if (shown++ == max_listed) {
        out << "  ... (" << report.parse_failures.size() - max_listed << " more)\n";
        break;
      }
      out << "  line " << p.line << ": " << p.error << '\n';
    }
  }
  return out.str();
}

}  // namespace curv
