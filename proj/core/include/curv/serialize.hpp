#pragma once

#include <string>

#include "curv/curvature.hpp"
#include "curv/measure.hpp"
#include "curv/patterns.hpp"
#include "curv/transport.hpp"
#include "curv/verify.hpp"

namespace curv {

// JSON emission. Rationals are rendered as canonical "num/den" strings
// (integers without the "/1"); vertex collections as arrays. Report JSON is
// byte-identical across runs with identical parameters and seed, so elapsed
// time is deliberately absent from it (the text summary carries it).

std::string to_json(const ProbabilityMeasure& mu, int indent = -1);
std::string to_json(const TransportPlan& plan, int indent = -1);
std::string to_json(const LipschitzWitness& w, int indent = -1);
std::string to_json(const CurvatureResult& r, int indent = -1);
std::string to_json(const PatternWitness& w, int indent = -1);
std::string to_json(const VerificationReport& report, int indent = 2);

// Human-readable aligned summary, including timing and up to `max_listed`
// failure/exception lines.
std::string to_text(const VerificationReport& report, std::size_t max_listed = 20);

}  // namespace curv
