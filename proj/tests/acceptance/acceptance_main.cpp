// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure.  Tolerances and budgets are pinned here, in code.

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <vector>

#include "dsp/crosscheck.hpp"
#include "dsp/quantum.hpp"
#include "dsp/report.hpp"
#include "dsp/rimhook.hpp"
#include "dsp/solver.hpp"
#include "dsp/twisted.hpp"
#include "dsp/witness.hpp"

using namespace dsp;
using liealg::Component;
using liealg::Family;
using parahoric::Group;
using parahoric::StandardConjugacyClass;
using solver::Answer;

namespace {

int g_failures = 0;

void run_criterion(int number, const std::string& title,
                   const std::function<bool(std::string&)>& body) {
  auto start = std::chrono::steady_clock::now();
  std::string detail;
  bool ok = false;
  try {
    ok = body(detail);
  } catch (const std::exception& e) {
    detail = std::string("exception: ") + e.what();
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::printf("criterion %2d [%s]: %s%s%s  (%.1fs)\n", number, title.c_str(),
              ok ? "PASS" : "FAIL", detail.empty() ? "" : " - ", detail.c_str(), secs);
  std::fflush(stdout);
  if (!ok) ++g_failures;
}

StandardConjugacyClass cls(Group g, std::vector<Rat> l) {
  StandardConjugacyClass c;
  c.group = g;
  c.n = int(l.size());
  c.lambdas = std::move(l);
  return c;
}

std::vector<StandardConjugacyClass> su2_triple(Rat a1, Rat a2, Rat a3) {
  return {cls(Group::SU, {-a1, a1}), cls(Group::SU, {-a2, a2}), cls(Group::SU, {-a3, a3})};
}

bool su2_semistable(Rat a1, Rat a2, Rat a3) {
  Rat mx = std::max({a1, a2, a3});
  Rat sum = a1 + a2 + a3;
  return mx + mx <= sum && sum <= Rat(1);
}
bool su2_stable(Rat a1, Rat a2, Rat a3) {
  Rat mx = std::max({a1, a2, a3});
  Rat sum = a1 + a2 + a3;
  return mx + mx < sum && sum < Rat(1);
}

// --------------------------------------------------------------------------

bool criterion1_typeA_agreement(std::string& detail) {
  long long pairs = 0;
  for (int n = 2; n <= 6; ++n) {
    for (int r = 1; r < n; ++r) {
      auto ring = quantum::shared_ring(Family::A, n - 1, r);
      const auto& sp = ring->space();
      for (int up = 0; up < sp.num_classes(); ++up)
        for (int vp = up; vp < sp.num_classes(); ++vp) {
          auto la = rimhook::partition_of_index_set(r, n, sp.index_sets[up]);
          auto mu = rimhook::partition_of_index_set(r, n, sp.index_sets[vp]);
          auto expect = rimhook::quantum_product(r, n, la, mu);
          const auto& got = ring->product_pos(up, vp);
          std::map<std::pair<rimhook::Partition, int>, BigInt> got_named;
          for (const auto& [k, c] : got.terms)
            got_named[{rimhook::partition_of_index_set(r, n, sp.index_sets[k.first]),
                       k.second}] = c;
          std::map<std::pair<rimhook::Partition, int>, BigInt> expect_named(expect.begin(),
                                                                            expect.end());
          if (got_named != expect_named) {
            detail = "mismatch on Gr(" + std::to_string(r) + "," + std::to_string(n) + ")";
            return false;
          }
          ++pairs;
        }
    }
  }
  detail = std::to_string(pairs) + " pairs agree exactly";
  return true;
}

bool criterion2_ring_axioms(std::string& detail) {
  std::vector<std::tuple<Family, int, int, Component>> spaces;
  for (int n = 2; n <= 6; ++n)
    for (int r = 1; r < n; ++r) spaces.push_back({Family::A, n - 1, r, Component::Whole});
  for (int m = 1; m <= 3; ++m)
    for (int r = 1; r <= m; ++r) spaces.push_back({Family::C, m, r, Component::Whole});
  for (int m = 1; m <= 3; ++m)
    for (int r = 1; r <= m; ++r) spaces.push_back({Family::B, m, r, Component::Whole});
  for (int m = 2; m <= 3; ++m) {
    for (int r = 1; r < m; ++r) spaces.push_back({Family::D, m, r, Component::Whole});
    spaces.push_back({Family::D, m, m, Component::Plus});
    spaces.push_back({Family::D, m, m, Component::Minus});
  }

  long long triples = 0, duality_checks = 0;
  for (auto [f, m, r, comp] : spaces) {
    auto ring = quantum::shared_ring(f, m, r, comp);
    const auto& sp = ring->space();
    const int N = sp.num_classes();
    if (N > 50) continue;
    // positivity is asserted inside the engine; spot-verify here too
    for (int a = 0; a < N; ++a)
      for (int b = a; b < N; ++b) {
        const auto& ab = ring->product_pos(a, b);
        for (const auto& [k, c] : ab.terms)
          if (c.sign() < 0) {
            detail = "negative structure constant on " + sp.name();
            return false;
          }
        if (!(ab == ring->product_pos(b, a))) {
          detail = "commutativity failure on " + sp.name();
          return false;
        }
      }
    for (int a = 0; a < N; ++a) {
      for (int b = 0; b < N; ++b) {
        if (sp.codims[a] + sp.codims[b] != sp.dim) continue;
        BigInt v = ring->gw_number_pos({a, b}, 0);
        if (v != BigInt(b == sp.pd[a] ? 1 : 0)) {
          detail = "duality failure on " + sp.name();
          return false;
        }
        ++duality_checks;
      }
      for (int b = a; b < N; ++b)
        for (int c = b; c < N; ++c) {
          quantum::QHElement ea, ec;
          ea.add(a, 0, BigInt(1));
          ec.add(c, 0, BigInt(1));
          auto left = ring->product(ring->product_pos(a, b), ec);
          auto right = ring->product(ea, ring->product_pos(b, c));
          if (!(left == right)) {
            detail = "associativity failure on " + sp.name();
            return false;
          }
          ++triples;
        }
    }
  }
  detail = std::to_string(triples) + " triples associative, " +
           std::to_string(duality_checks) + " duality pairings";
  return true;
}

bool criterion3_su2_grid(std::string& detail) {
  witness::SearchOptions wopts;
  wopts.tolerance = 1e-8;
  wopts.restart_budget = 400;
  wopts.iterations = 1500;
  wopts.threads = 2;
  int yes_points = 0;
  for (int i = 0; i <= 4; ++i)
    for (int j = i; j <= 4; ++j)
      for (int k = j; k <= 4; ++k) {
        Rat a1(i, 8), a2(j, 8), a3(k, 8);
        auto v = solver::decide_sl(su2_triple(a1, a2, a3));
        bool oracle_ss = su2_semistable(a1, a2, a3);
        bool oracle_st = su2_stable(a1, a2, a3);
        if ((v.semistable.answer == Answer::YES) != oracle_ss ||
            (v.stable.answer == Answer::YES) != oracle_st) {
          detail = "verdict mismatch at (" + a1.str() + "," + a2.str() + "," + a3.str() + ")";
          return false;
        }
        if (oracle_ss) {
          ++yes_points;
          auto found = witness::search(su2_triple(a1, a2, a3), wopts);
          if (!found) {
            detail = "no witness at YES point (" + a1.str() + "," + a2.str() + "," +
                     a3.str() + ")";
            return false;
          }
        }
      }
  detail = "35 grid points agree; " + std::to_string(yes_points) + " YES points witnessed";
  return true;
}

bool criterion4_quaternion(std::string& detail) {
  auto v = solver::decide_sl(su2_triple(Rat(1, 4), Rat(1, 4), Rat(1, 4)));
  if (v.stable.answer != Answer::YES) {
    detail = "stable verdict is not YES";
    return false;
  }
  witness::SearchOptions opts;
  opts.tolerance = 1e-10;
  opts.restart_budget = 200;
  auto found = witness::search(su2_triple(Rat(1, 4), Rat(1, 4), Rat(1, 4)), opts);
  if (!found || found->residual >= 1e-10) {
    detail = "witness residual not below 1e-10";
    return false;
  }
  std::ostringstream os;
  os << "stable YES, residual " << found->residual;
  detail = os.str();
  return true;
}

bool crosscheck_ok(const crosscheck::Stats& stats, std::string& detail) {
  std::ostringstream os;
  os << stats.points << " points, " << stats.agreements << " agreements, "
     << stats.indeterminate << " indeterminate, " << stats.contradictions
     << " contradictions; " << stats.fully_decided_equal << "/"
     << stats.fully_decided_points << " fully decided points equal";
  detail = os.str();
  if (stats.contradictions != 0) return false;
  return stats.fully_decided_equal == stats.fully_decided_points;
}

bool criterion5_ex1(std::string& detail) {
  solver::Options opts;
  opts.threads = 2;
  auto stats = crosscheck::run_ex1(Rat(1, 8), opts);
  if (!crosscheck_ok(stats, detail)) return false;
  // n = 3 keeps every twisted state inside the oracle: nothing indeterminate.
  if (stats.indeterminate != 0) {
    detail += "; expected full oracle coverage";
    return false;
  }
  return true;
}

bool criterion6_ex3(std::string& detail) {
  solver::Options opts;
  opts.threads = 2;
  auto stats = crosscheck::run_ex3(Rat(1, 8), opts);
  return crosscheck_ok(stats, detail);
}

bool criterion7_ex2(std::string& detail) {
  solver::Options opts;
  opts.threads = 2;
  auto stats = crosscheck::run_ex2(200, 0xDEC1DEULL, opts);
  return crosscheck_ok(stats, detail);
}

bool criterion8_spin_delegation(std::string& detail) {
  long long checked = 0;
  for (int i = 0; i <= 4; ++i)
    for (int j = i; j <= 4; ++j)
      for (int k = j; k <= 4; ++k) {
        auto so3 = solver::weight_map_so3(su2_triple(Rat(i, 8), Rat(j, 8), Rat(k, 8)));
        std::vector<StandardConjugacyClass> spin = so3;
        for (auto& c : spin) c.group = Group::Spin;
        if (!(solver::decide_spin(spin) == solver::decide_so(so3))) {
          detail = "verdict structures differ";
          return false;
        }
        ++checked;
      }
  // a handful of SO_5 instances through the ex3 map
  for (auto [a, b] : std::vector<std::pair<Rat, Rat>>{{Rat(1, 4), Rat(1, 8)},
                                                      {Rat(3, 8), Rat(1, 4)},
                                                      {Rat(1, 2), Rat(0)}}) {
    std::vector<StandardConjugacyClass> sp4(3, cls(Group::Sp, {-a, -b, b, a}));
    auto so5 = solver::weight_map_so5(sp4);
    std::vector<StandardConjugacyClass> spin = so5;
    for (auto& c : spin) c.group = Group::Spin;
    if (!(solver::decide_spin(spin) == solver::decide_so(so5))) {
      detail = "SO_5 verdict structures differ";
      return false;
    }
    ++checked;
  }
  detail = std::to_string(checked) + " instances, full Verdict equality";
  return true;
}

bool criterion9_soundness(std::string& detail) {
  witness::SearchOptions opts;
  opts.restart_budget = 10000;
  opts.iterations = 60;
  opts.tolerance = 1e-10;
  opts.threads = 2;
  int no_points = 0;
  for (int i = 0; i <= 4; ++i)
    for (int j = i; j <= 4; ++j)
      for (int k = j; k <= 4; ++k) {
        Rat a1(i, 8), a2(j, 8), a3(k, 8);
        auto classes = su2_triple(a1, a2, a3);
        if (solver::decide_sl(classes).semistable.answer != Answer::NO) continue;
        ++no_points;
        if (witness::search(classes, opts)) {
          detail = "numeric witness found at an exact NO point (" + a1.str() + "," +
                   a2.str() + "," + a3.str() + ")";
          return false;
        }
        // the mapped SO_3 problem must stay witness-free as well
        auto so3 = solver::weight_map_so3(classes);
        if (solver::decide_so(so3).semistable.answer == Answer::NO &&
            witness::search(so3, opts)) {
          detail = "numeric witness found at an exact SO_3 NO point";
          return false;
        }
      }
  detail = std::to_string(no_points) + " NO points, 10^4 restarts each, no witness";
  return true;
}

bool criterion10_validator_fuzz(std::string& detail) {
  SplitMix64 rng(0xFABACEAEULL);
  const int total = 10000;
  int per_kind[6] = {0, 0, 0, 0, 0, 0};
  for (int t = 0; t < total; ++t) {
    int kind = int(rng.below(6));
    parahoric::ParabolicDatum d;
    d.group = rng.below(2) ? Group::SO : Group::Sp;
    int half = 1 + int(rng.below(3));
    d.n = d.group == Group::Sp ? 2 * (half + 1) : 2 * half + 1 + int(rng.below(2));
    parahoric::FlagPoint p;
    std::string expect;
    auto denom = [&]() { return 3 + int(rng.below(6)); };
    switch (kind) {
      case 0: {  // odd F^1
        int dim = 1 + 2 * int(rng.below((d.n - 1) / 2));
        p.flag_dims = {dim};
        p.weights = {Rat(1, 2)};
        expect = "dim F^1 must be even";
        break;
      }
      case 1: {  // asymmetric weight multiset
        p.flag_dims = {2, 1};
        int q = denom();
        p.weights = {Rat(1, q), Rat(2, q + 2)};
        if (p.weights[0] + p.weights[1] == Rat(1)) p.weights[1] = Rat(1, 2);
        if (!(p.weights[0] < p.weights[1])) p.weights = {Rat(1, 7), Rat(2, 5)};
        expect = "weight multiset must be symmetric about 1/2";
        break;
      }
      case 2: {  // odd multiplicity at 1/2
        p.flag_dims = {2, 1};
        p.weights = {Rat(1, 4), Rat(1, 2)};
        expect = "weight-1/2 multiplicity must be even";
        break;
      }
      case 3: {  // non-increasing weights
        p.flag_dims = {2, 1};
        p.weights = {Rat(3, 4), Rat(1, 4)};
        expect = "weights must be strictly increasing within [0,1)";
        break;
      }
      case 4: {  // broken flag chain
        p.flag_dims = {2, 2};
        p.weights = {Rat(1, 4), Rat(3, 4)};
        expect = "flag dims must be strictly decreasing within 0 < dim <= n";
        break;
      }
      case 5: {  // weight outside [0,1)
        p.flag_dims = {2, 1};
        p.weights = {Rat(1, 4), Rat(5, 4)};
        expect = "weights must be strictly increasing within [0,1)";
        break;
      }
    }
    d.points.push_back(p);
    auto violations = parahoric::validate(d);
    bool found = false;
    for (const auto& v : violations)
      if (v.clause == expect) found = true;
    if (!found) {
      detail = "kind " + std::to_string(kind) + " not rejected with '" + expect + "'";
      return false;
    }
    ++per_kind[kind];
  }
  detail = std::to_string(total) + " malformed data rejected with the named clause";
  return true;
}

bool criterion11_degree_bounds(std::string& detail) {
  // For sampled states of several problems, slope at d_max+1 is never positive.
  std::vector<std::vector<StandardConjugacyClass>> problems;
  problems.push_back(su2_triple(Rat(1, 2), Rat(3, 8), Rat(1, 4)));
  problems.push_back(std::vector<StandardConjugacyClass>(
      3, cls(Group::Sp, {Rat(-1, 2), Rat(-1, 8), Rat(1, 8), Rat(1, 2)})));
  problems.push_back(std::vector<StandardConjugacyClass>(
      3, cls(Group::SO, {Rat(-3, 8), Rat(-1, 8), Rat(0), Rat(1, 8), Rat(3, 8)})));
  long long total_checked = 0;
  for (const auto& classes : problems) {
    auto beta = solver::descending_weights(classes);
    bool with_twisted = classes[0].group == Group::SO;
    auto info = solver::enumerate_states(classes, with_twisted,
                                         [](const solver::SchubertState&) { return true; });
    const int dmax = info.d_max;
    long long checked = 0;
    bool bad = false;
    solver::enumerate_states(classes, with_twisted,
                             [&](const solver::SchubertState& st) {
                               solver::SchubertState bumped = st;
                               bumped.d = dmax + 1;
                               if (solver::slope_term(beta, bumped) > Rat(0)) {
                                 bad = true;
                                 return false;
                               }
                               ++checked;
                               return checked < 1000;
                             });
    if (bad) {
      detail = "positive slope beyond d_max";
      return false;
    }
    total_checked += checked;
  }
  detail = std::to_string(total_checked) + " sampled states verified across problems";
  return true;
}

bool criterion12_determinism(std::string& detail) {
  report::Problem p;
  p.classes = {cls(Group::SO, {Rat(-1, 2), Rat(-1, 4), Rat(0), Rat(1, 4), Rat(1, 2)}),
               cls(Group::SO, {Rat(-1, 4), Rat(-1, 8), Rat(0), Rat(1, 8), Rat(1, 4)}),
               cls(Group::SO, {Rat(-3, 8), Rat(0), Rat(0), Rat(0), Rat(3, 8)})};
  p.mode = "both";
  std::string reference;
  for (int threads : {1, 4, 8}) {
    for (int run = 0; run < 3; ++run) {
      solver::Options opts;
      opts.threads = threads;
      auto v = solver::decide(p.classes, opts);
      std::string s = report::decide_report(p, v).dump(2);
      if (reference.empty())
        reference = s;
      else if (s != reference) {
        detail = "report bytes differ at threads=" + std::to_string(threads);
        return false;
      }
    }
  }
  detail = "byte-identical across 3 runs x threads {1,4,8}";
  return true;
}

}  // namespace

int main() {
  std::printf("acceptance suite\n");
  run_criterion(1, "type-A engine agreement", criterion1_typeA_agreement);
  run_criterion(2, "ring axioms", criterion2_ring_axioms);
  run_criterion(3, "SU(2) closed form", criterion3_su2_grid);
  run_criterion(4, "quaternion instance", criterion4_quaternion);
  run_criterion(5, "ex1 SL2->SO3", criterion5_ex1);
  run_criterion(6, "ex3 Sp4->SO5", criterion6_ex3);
  run_criterion(7, "ex2 SL4->SO6", criterion7_ex2);
  run_criterion(8, "spin delegation", criterion8_spin_delegation);
  run_criterion(9, "soundness vs numerics", criterion9_soundness);
  run_criterion(10, "structural validators", criterion10_validator_fuzz);
  run_criterion(11, "degree-bound completeness", criterion11_degree_bounds);
  run_criterion(12, "determinism", criterion12_determinism);
  if (g_failures) {
    std::printf("%d criterion(s) FAILED\n", g_failures);
    return 1;
  }
  std::printf("all criteria PASS\n");
  return 0;
}
