#pragma once

// Problem-file parsing and deterministic machine-readable reports.  All exact
// quantities are rendered as "p/q" strings; floating point appears only in
// witness sections.  Field order is fixed so reports are byte-stable.

#include <string>

#include "json.hpp"

#include "dsp/parahoric.hpp"
#include "dsp/solver.hpp"
#include "dsp/witness.hpp"

namespace dsp::report {

using Json = nlohmann::ordered_json;

struct Problem {
  std::vector<parahoric::StandardConjugacyClass> classes;
  std::string mode = "both";  // semistable | stable | both
  solver::Options options;
  // witness knobs
  double tolerance = 1e-10;
  long long budget = 200;
};

class ParseError : public std::runtime_error {
public:
  explicit ParseError(const std::string& w) : std::runtime_error(w) {}
};

Problem parse_problem(const Json& j);
Problem parse_problem_file(const std::string& path);

Json problem_echo(const Problem& p);
Json verdict_json(const solver::Verdict& v);
Json decide_report(const Problem& p, const solver::Verdict& v);
Json witness_report(const Problem& p, const std::optional<witness::WitnessTuple>& w);

// 0 = YES, 1 = NO, 2 = INDETERMINATE; mode "both" follows the semistable
// verdict.
int exit_code(const Problem& p, const solver::Verdict& v);

// exit codes for failures
constexpr int kExitParseError = 64;
constexpr int kExitInternalError = 70;

}  // namespace dsp::report
