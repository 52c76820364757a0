// dsp: exact decision engine for the multiplicative Deligne-Simpson problem
// over the classical groups, plus Gromov-Witten queries, isogeny cross-checks
// and numeric witness searches.

#include <chrono>
#include <cstdlib>
#include <iostream>

#include "CLI11.hpp"

#include "dsp/crosscheck.hpp"
#include "dsp/quantum.hpp"
#include "dsp/report.hpp"
#include "dsp/solver.hpp"
#include "dsp/witness.hpp"

namespace {

using dsp::Rat;
using dsp::report::Json;

int env_threads() {
  const char* v = std::getenv("DSP_THREADS");
  if (!v) return 1;
  int t = std::atoi(v);
  return t >= 1 ? t : 1;
}

// "gr(2,4)", "ig(2,6)", "og(3,6)+", "og(2,7)"
dsp::liealg::GrassmannianSpace parse_space(std::string s) {
  using namespace dsp::liealg;
  for (auto& ch : s) ch = char(tolower(ch));
  Component comp = Component::Whole;
  if (!s.empty() && (s.back() == '+' || s.back() == '-')) {
    comp = s.back() == '+' ? Component::Plus : Component::Minus;
    s.pop_back();
  }
  auto lp = s.find('('), comma = s.find(','), rp = s.find(')');
  if (lp == std::string::npos || comma == std::string::npos || rp == std::string::npos)
    throw dsp::report::ParseError("space must look like gr(r,n), ig(r,2n) or og(r,n)");
  std::string kind = s.substr(0, lp);
  int r = std::stoi(s.substr(lp + 1, comma - lp - 1));
  int n = std::stoi(s.substr(comma + 1, rp - comma - 1));
  if (kind == "gr") return build_space(Family::A, n - 1, r, comp);
  if (kind == "ig") {
    if (n % 2) throw dsp::report::ParseError("ig needs an even ambient dimension");
    return build_space(Family::C, n / 2, r, comp);
  }
  if (kind == "og") {
    if (n % 2) return build_space(Family::B, n / 2, r, comp);
    return build_space(Family::D, n / 2, r, comp);
  }
  throw dsp::report::ParseError("unknown space kind '" + kind + "'");
}

std::vector<std::vector<int>> parse_class_list(const std::string& s) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  std::string tok;
  auto flush_tok = [&]() {
    if (!tok.empty()) {
      cur.push_back(std::stoi(tok));
      tok.clear();
    }
  };
  for (char ch : s) {
    if (ch == ',') {
      flush_tok();
    } else if (ch == ';') {
      flush_tok();
      out.push_back(cur);
      cur.clear();
    } else if (!isspace(static_cast<unsigned char>(ch))) {
      tok.push_back(ch);
    }
  }
  flush_tok();
  if (!cur.empty()) out.push_back(cur);
  return out;
}

int cmd_decide(const std::string& path, int threads, bool timing, bool no_twisted) {
  auto problem = dsp::report::parse_problem_file(path);
  if (threads > 0) problem.options.threads = threads;
  if (no_twisted) problem.options.twisted_oracle = false;
  auto start = std::chrono::steady_clock::now();
  auto verdict = dsp::solver::decide(problem.classes, problem.options);
  auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                     std::chrono::steady_clock::now() - start)
                     .count();
  std::cout << dsp::report::decide_report(problem, verdict).dump(2) << "\n";
  if (timing) std::cerr << "decide took " << elapsed << " ms\n";
  return dsp::report::exit_code(problem, verdict);
}

int cmd_gw(const std::string& space_str, const std::string& classes_str, int degree) {
  auto space = parse_space(space_str);
  auto ring = dsp::quantum::shared_ring(space.family, space.group_rank, space.r,
                                        space.component);
  auto classes = parse_class_list(classes_str);
  if (classes.size() < 1) throw dsp::report::ParseError("need at least one class");
  long long codim_sum = 0;
  for (const auto& I : classes) codim_sum += dsp::liealg::codim(space, I);
  bool graded = codim_sum == space.dim + (long long)degree * space.c1;
  dsp::BigInt value = ring->gw_number({classes, degree});
  Json j;
  j["tool"] = "dsp";
  j["command"] = "gw";
  j["space"] = space.name();
  j["dim"] = space.dim;
  j["c1"] = space.c1;
  Json cl = Json::array();
  for (const auto& I : classes) cl.push_back(I);
  j["classes"] = cl;
  j["degree"] = degree;
  j["codim_sum"] = codim_sum;
  j["graded"] = graded;
  if (!graded) j["note"] = "grading mismatch: the number vanishes identically";
  j["value"] = value.str();
  std::cout << j.dump(2) << "\n";
  return 0;
}

int cmd_crosscheck(const std::string& which, const std::string& step_str, int samples,
                   uint64_t seed, int threads, bool verbose) {
  dsp::solver::Options opts;
  opts.threads = threads;
  Rat step = Rat::parse(step_str);
  if (step <= Rat(0)) throw dsp::report::ParseError("step must be positive");

  Json rows = Json::array();
  dsp::crosscheck::Sink sink;
  if (verbose) {
    sink = [&](const dsp::crosscheck::PointResult& pr) {
      Json row;
      Json src = Json::array();
      for (const auto& c : pr.source) {
        Json v = Json::array();
        for (const auto& l : c.lambdas) v.push_back(l.str());
        src.push_back(v);
      }
      row["source"] = src;
      row["sl_semistable"] = dsp::solver::answer_name(pr.sl_semistable);
      row["sl_stable"] = dsp::solver::answer_name(pr.sl_stable);
      row["so_semistable"] = dsp::solver::answer_name(pr.so_semistable);
      row["so_stable"] = dsp::solver::answer_name(pr.so_stable);
      row["contradiction"] = pr.contradiction;
      rows.push_back(row);
    };
  }

  dsp::crosscheck::Stats stats;
  if (which == "ex1")
    stats = dsp::crosscheck::run_ex1(step, opts, sink);
  else if (which == "ex3")
    stats = dsp::crosscheck::run_ex3(step, opts, sink);
  else if (which == "ex2")
    stats = dsp::crosscheck::run_ex2(samples, seed, opts, sink);
  else
    throw dsp::report::ParseError("--which must be ex1, ex2 or ex3");

  Json j;
  j["tool"] = "dsp";
  j["command"] = "crosscheck";
  j["which"] = which;
  if (which == "ex2") {
    j["samples"] = samples;
    j["seed"] = seed;
  } else {
    j["step"] = step.str();
  }
  j["points"] = stats.points;
  j["comparisons"] = stats.comparisons;
  j["agreements"] = stats.agreements;
  j["indeterminate"] = stats.indeterminate;
  j["contradictions"] = stats.contradictions;
  j["fully_decided_points"] = stats.fully_decided_points;
  j["fully_decided_equal"] = stats.fully_decided_equal;
  if (verbose) j["rows"] = rows;
  std::cout << j.dump(2) << "\n";
  return stats.contradictions == 0 ? 0 : 3;
}

int cmd_witness(const std::string& path, uint64_t seed, long long budget,
                double tolerance, int threads) {
  auto problem = dsp::report::parse_problem_file(path);
  dsp::witness::SearchOptions opts;
  opts.seed = seed;
  opts.restart_budget = budget;
  opts.tolerance = tolerance;
  opts.threads = threads;
  auto found = dsp::witness::search(problem.classes, opts);
  std::cout << dsp::report::witness_report(problem, found).dump(2) << "\n";
  return found ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact multiplicative Deligne-Simpson decisions for SU/Sp/SO/Spin"};
  app.require_subcommand(1);

  std::string file, space, classes, which = "ex1", step = "1/8";
  int degree = 0, samples = 200, threads = env_threads();
  uint64_t seed = 20240817;
  long long budget = 200;
  double tolerance = 1e-10;
  bool timing = false, verbose = false, no_twisted = false;

  auto* decide = app.add_subcommand("decide", "decide a problem file");
  decide->add_option("file", file, "problem JSON file")->required();
  decide->add_option("--threads", threads, "worker threads");
  decide->add_flag("--timing", timing, "print wall time to stderr");
  decide->add_flag("--no-twisted-oracle", no_twisted, "disable the twisted-branch oracle");

  auto* gw = app.add_subcommand("gw", "evaluate a Gromov-Witten number");
  gw->add_option("--space", space, "gr(r,n) | ig(r,2n) | og(r,n)[+|-]")->required();
  gw->add_option("--classes", classes, "index sets, e.g. \"1,2;3,4;5,6\"")->required();
  gw->add_option("--degree", degree, "subsheaf degree d")->required();

  auto* cc = app.add_subcommand("crosscheck", "isogeny cross-check sweeps");
  cc->add_option("--which", which, "ex1 | ex2 | ex3")->required();
  cc->add_option("--step", step, "grid step (ex1/ex3)");
  cc->add_option("--samples", samples, "sample count (ex2)");
  cc->add_option("--seed", seed, "sample seed (ex2)");
  cc->add_option("--threads", threads, "worker threads");
  cc->add_flag("--verbose", verbose, "emit per-point rows");

  auto* wit = app.add_subcommand("witness", "numeric witness search");
  wit->add_option("file", file, "problem JSON file")->required();
  wit->add_option("--seed", seed, "search seed");
  wit->add_option("--budget", budget, "restart budget");
  wit->add_option("--tolerance", tolerance, "acceptance tolerance");
  wit->add_option("--threads", threads, "worker threads");

  CLI11_PARSE(app, argc, argv);

  try {
    if (decide->parsed()) return cmd_decide(file, threads, timing, no_twisted);
    if (gw->parsed()) return cmd_gw(space, classes, degree);
    if (cc->parsed()) return cmd_crosscheck(which, step, samples, seed, threads, verbose);
    if (wit->parsed()) return cmd_witness(file, seed, budget, tolerance, threads);
  } catch (const dsp::report::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return dsp::report::kExitParseError;
  } catch (const dsp::NumError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return dsp::report::kExitParseError;
  } catch (const dsp::parahoric::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return dsp::report::kExitParseError;
  } catch (const dsp::liealg::UnsupportedRank& e) {
    std::cerr << "error: " << e.what() << "\n";
    return dsp::report::kExitParseError;
  } catch (const dsp::liealg::InadmissibleIndexSet& e) {
    std::cerr << "error: " << e.what() << "\n";
    return dsp::report::kExitParseError;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return dsp::report::kExitInternalError;
  }
  return dsp::report::kExitInternalError;
}
