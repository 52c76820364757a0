#include "dsp/crosscheck.hpp"

#include <algorithm>

namespace dsp::crosscheck {

using parahoric::Group;
using parahoric::StandardConjugacyClass;
using solver::Answer;

namespace {

StandardConjugacyClass su2(const Rat& a) {
  StandardConjugacyClass c;
  c.group = Group::SU;
  c.n = 2;
  c.lambdas = {-a, a};
  return c;
}

StandardConjugacyClass sp4(const Rat& a, const Rat& b) {
  StandardConjugacyClass c;
  c.group = Group::Sp;
  c.n = 4;
  c.lambdas = {-a, -b, b, a};
  return c;
}

void compare_point(PointResult& pr,
                   const std::vector<std::vector<StandardConjugacyClass>>& lifts,
                   const std::function<solver::Verdict(
                       const std::vector<StandardConjugacyClass>&)>& decide_source,
                   const solver::Verdict& so, Stats& stats) {
  pr.sl_semistable = Answer::NO;
  pr.sl_stable = Answer::NO;
  for (const auto& lift : lifts) {
    auto v = decide_source(lift);
    if (v.semistable.answer == Answer::YES) pr.sl_semistable = Answer::YES;
    if (v.stable.answer == Answer::YES) pr.sl_stable = Answer::YES;
  }
  pr.so_semistable = so.semistable.answer;
  pr.so_stable = so.stable.answer;
  pr.fully_decided = pr.so_semistable != Answer::INDETERMINATE &&
                     pr.so_stable != Answer::INDETERMINATE;

  auto tally = [&](Answer sl, Answer soa) {
    ++stats.comparisons;
    if (soa == Answer::INDETERMINATE) {
      ++stats.indeterminate;
      return;
    }
    if (sl == soa) {
      ++stats.agreements;
    } else {
      ++stats.contradictions;
      pr.contradiction = true;
    }
  };
  tally(pr.sl_semistable, pr.so_semistable);
  tally(pr.sl_stable, pr.so_stable);
  ++stats.points;
  if (pr.fully_decided) {
    ++stats.fully_decided_points;
    if (pr.sl_semistable == pr.so_semistable && pr.sl_stable == pr.so_stable)
      ++stats.fully_decided_equal;
  }
}

std::vector<Rat> grid_values(const Rat& step) {
  std::vector<Rat> vals;
  Rat v(0);
  while (v <= Rat(1, 2)) {
    vals.push_back(v);
    v += step;
  }
  return vals;
}

}  // namespace

Stats run_ex1(const Rat& step, const solver::Options& opts, const Sink& sink) {
  Stats stats;
  auto vals = grid_values(step);
  const int m = int(vals.size());
  for (int i = 0; i < m; ++i)
    for (int j = i; j < m; ++j)
      for (int k = j; k < m; ++k) {
        PointResult pr;
        pr.source = {su2(vals[i]), su2(vals[j]), su2(vals[k])};
        pr.mapped = solver::weight_map_so3(pr.source);
        auto so = solver::decide_so(pr.mapped, opts);
        compare_point(
            pr, solver::lifts_of_so3(pr.mapped),
            [&](const std::vector<StandardConjugacyClass>& c) {
              return solver::decide_sl(c, opts);
            },
            so, stats);
        if (sink) sink(pr);
      }
  return stats;
}

Stats run_ex3(const Rat& step, const solver::Options& opts, const Sink& sink) {
  Stats stats;
  auto vals = grid_values(step);
  std::vector<std::pair<Rat, Rat>> pairs;
  for (const auto& a : vals)
    for (const auto& b : vals)
      if (b <= a) pairs.push_back({a, b});
  const int m = int(pairs.size());
  for (int i = 0; i < m; ++i)
    for (int j = i; j < m; ++j)
      for (int k = j; k < m; ++k) {
        PointResult pr;
        pr.source = {sp4(pairs[i].first, pairs[i].second),
                     sp4(pairs[j].first, pairs[j].second),
                     sp4(pairs[k].first, pairs[k].second)};
        pr.mapped = solver::weight_map_so5(pr.source);
        auto so = solver::decide_so(pr.mapped, opts);
        compare_point(
            pr, solver::lifts_of_so5(pr.mapped),
            [&](const std::vector<StandardConjugacyClass>& c) {
              return solver::decide_sp(c, opts);
            },
            so, stats);
        if (sink) sink(pr);
      }
  return stats;
}

Stats run_ex2(int samples, uint64_t seed, const solver::Options& opts, const Sink& sink) {
  Stats stats;
  SplitMix64 rng(seed);
  for (int trial = 0; trial < samples; ++trial) {
    std::vector<StandardConjugacyClass> su;
    for (int w = 0; w < 3; ++w) {
      std::vector<long long> num(4);
      long long s = 0;
      for (int i = 0; i < 3; ++i) {
        num[i] = (long long)rng.below(9) - 4;
        s += num[i];
      }
      long long last = ((-s) % 8 + 8) % 8;
      if (last > 4) last -= 8;
      num[3] = last;
      std::vector<Rat> l;
      for (auto v : num) l.push_back(Rat(v, 8));
      std::sort(l.begin(), l.end());
      StandardConjugacyClass c;
      c.group = Group::SU;
      c.n = 4;
      c.lambdas = std::move(l);
      su.push_back(std::move(c));
    }
    PointResult pr;
    pr.source = su;
    pr.mapped = solver::weight_map_so6(su);
    auto so = solver::decide_so(pr.mapped, opts);
    compare_point(
        pr, solver::su4_center_twists(su),
        [&](const std::vector<StandardConjugacyClass>& c) {
          return solver::decide_sl(c, opts);
        },
        so, stats);
    if (sink) sink(pr);
  }
  return stats;
}

}  // namespace dsp::crosscheck
