#include "dsp/report.hpp"

#include <fstream>

namespace dsp::report {

using parahoric::Group;

namespace {

Group parse_group(const std::string& s) {
  if (s == "su") return Group::SU;
  if (s == "sp") return Group::Sp;
  if (s == "so") return Group::SO;
  if (s == "spin") return Group::Spin;
  throw ParseError("unknown group '" + s + "' (expected su|sp|so|spin)");
}

std::string group_str(Group g) {
  switch (g) {
    case Group::SU: return "su";
    case Group::Sp: return "sp";
    case Group::SO: return "so";
    case Group::Spin: return "spin";
  }
  return "?";
}

std::string branch_str(solver::Branch b) {
  return b == solver::Branch::Trivial ? "trivial" : "twisted";
}

std::string component_str(liealg::Component c) {
  switch (c) {
    case liealg::Component::Whole: return "";
    case liealg::Component::Plus: return "+";
    case liealg::Component::Minus: return "-";
  }
  return "";
}

Json state_json(const solver::SchubertState& st) {
  Json j;
  j["r"] = st.r;
  j["d"] = st.d;
  j["branch"] = branch_str(st.branch);
  if (st.component != liealg::Component::Whole)
    j["component"] = component_str(st.component);
  Json sets = Json::array();
  for (const auto& I : st.index_sets) sets.push_back(I);
  j["index_sets"] = sets;
  return j;
}

Json branch_json(const solver::BranchReport& br) {
  Json j;
  j["branch"] = branch_str(br.branch);
  j["holds"] = solver::answer_name(br.holds);
  j["states_enumerated"] = br.states_enumerated;
  j["gates_tested"] = br.gates_tested;
  j["unknown_gates"] = br.unknown_gates;
  if (br.violation) {
    Json w = state_json(br.violation->state);
    w["slope"] = br.violation->slope.str();
    w["gate"] = br.violation->gate;
    j["violation"] = w;
  }
  return j;
}

}  // namespace

Problem parse_problem(const Json& j) {
  Problem p;
  if (!j.is_object()) throw ParseError("problem file must be a JSON object");
  if (!j.contains("group") || !j.contains("n") || !j.contains("classes"))
    throw ParseError("problem file needs 'group', 'n' and 'classes'");
  Group g = parse_group(j.at("group").get<std::string>());
  int n = j.at("n").get<int>();
  for (const auto& row : j.at("classes")) {
    parahoric::StandardConjugacyClass c;
    c.group = g;
    c.n = n;
    for (const auto& entry : row) {
      try {
        c.lambdas.push_back(Rat::parse(entry.get<std::string>()));
      } catch (const NumError& e) {
        throw ParseError(std::string("bad rational: ") + e.what());
      }
    }
    p.classes.push_back(std::move(c));
  }
  if (j.contains("mode")) {
    p.mode = j.at("mode").get<std::string>();
    if (p.mode != "semistable" && p.mode != "stable" && p.mode != "both")
      throw ParseError("mode must be semistable|stable|both");
  }
  if (j.contains("options")) {
    const auto& o = j.at("options");
    if (o.contains("seed")) p.options.seed = o.at("seed").get<uint64_t>();
    if (o.contains("threads")) p.options.threads = o.at("threads").get<int>();
    if (o.contains("twisted_oracle"))
      p.options.twisted_oracle = o.at("twisted_oracle").get<bool>();
    if (o.contains("budget")) p.budget = o.at("budget").get<long long>();
    if (o.contains("tolerance")) p.tolerance = o.at("tolerance").get<double>();
  }
  auto violations = parahoric::validate(p.classes);
  if (!violations.empty()) {
    std::string msg = "invalid classes:";
    for (const auto& v : violations) {
      msg += " [";
      if (v.point >= 0) msg += "point " + std::to_string(v.point + 1) + ": ";
      msg += v.clause + "]";
    }
    throw ParseError(msg);
  }
  return p;
}

Problem parse_problem_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open problem file: " + path);
  Json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    throw ParseError(std::string("JSON parse failure: ") + e.what());
  }
  return parse_problem(j);
}

Json problem_echo(const Problem& p) {
  Json j;
  j["group"] = group_str(p.classes[0].group);
  j["n"] = p.classes[0].n;
  j["mode"] = p.mode;
  Json classes = Json::array();
  for (const auto& c : p.classes) {
    Json row = Json::array();
    for (const auto& l : c.lambdas) row.push_back(l.str());
    classes.push_back(row);
  }
  j["classes"] = classes;
  // Thread count is an execution detail; reports must be byte-identical
  // across thread settings.
  j["options"] = Json{{"seed", p.options.seed},
                      {"twisted_oracle", p.options.twisted_oracle}};
  return j;
}

Json verdict_json(const solver::Verdict& v) {
  Json j;
  j["semistable"] = solver::answer_name(v.semistable.answer);
  j["stable"] = solver::answer_name(v.stable.answer);
  return j;
}

Json decide_report(const Problem& p, const solver::Verdict& v) {
  Json j;
  j["tool"] = "dsp";
  j["command"] = "decide";
  j["input"] = problem_echo(p);
  j["verdicts"] = verdict_json(v);
  Json branches;
  Json ss = Json::array(), st = Json::array();
  for (const auto& br : v.semistable.branches) ss.push_back(branch_json(br));
  for (const auto& br : v.stable.branches) st.push_back(branch_json(br));
  branches["semistable"] = ss;
  branches["stable"] = st;
  j["branches"] = branches;
  Json witnesses = Json::array();
  for (const auto* mv : {&v.semistable, &v.stable})
    for (const auto& br : mv->branches)
      if (br.violation) {
        Json w = state_json(br.violation->state);
        w["mode"] = br.violation->mode == solver::Mode::Semistable ? "semistable" : "stable";
        w["slope"] = br.violation->slope.str();
        w["gate"] = br.violation->gate;
        witnesses.push_back(w);
      }
  j["witnesses"] = witnesses;
  j["exit_code"] = exit_code(p, v);
  return j;
}

Json witness_report(const Problem& p, const std::optional<witness::WitnessTuple>& w) {
  Json j;
  j["tool"] = "dsp";
  j["command"] = "witness";
  j["input"] = problem_echo(p);
  j["found"] = w.has_value();
  if (w) {
    Json numeric;  // clearly marked floating-point section
    char buf[64];
    snprintf(buf, sizeof buf, "%.3e", w->residual);
    numeric["residual"] = buf;
    numeric["restart"] = w->restart;
    Json devs = Json::array();
    for (double d : w->class_deviation) {
      snprintf(buf, sizeof buf, "%.3e", d);
      devs.push_back(buf);
    }
    numeric["class_deviation"] = devs;
    j["numeric"] = numeric;
  }
  return j;
}

int exit_code(const Problem& p, const solver::Verdict& v) {
  const solver::ModeVerdict& mv = p.mode == "stable" ? v.stable : v.semistable;
  switch (mv.answer) {
    case solver::Answer::YES: return 0;
    case solver::Answer::NO: return 1;
    case solver::Answer::INDETERMINATE: return 2;
  }
  return kExitInternalError;
}

}  // namespace dsp::report
