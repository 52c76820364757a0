#pragma once

// Cross-check sweeps over the exceptional isogenies SL_2 -> SO_3,
// Sp_4 -> SO_5 and SL_4 -> SO_6.  The simply-connected side is decided for
// every lift of the mapped classes (the covering kernel gives two class
// choices per point); existence on the SO side is equivalent to existence for
// some lift, so the comparison is
//
//   OR over lifts of the SL/Sp verdict   vs   the SO verdict,
//
// mode by mode.  An SO verdict may be INDETERMINATE when twisted-branch gates
// are out of the oracle's range; that counts as covered-inconsistency only if
// the definite part already contradicts.

#include <functional>

#include "dsp/solver.hpp"

namespace dsp::crosscheck {

struct PointResult {
  std::vector<parahoric::StandardConjugacyClass> source;  // simply connected side
  std::vector<parahoric::StandardConjugacyClass> mapped;  // SO side
  solver::Answer sl_semistable = solver::Answer::NO;      // OR over lifts
  solver::Answer sl_stable = solver::Answer::NO;
  solver::Answer so_semistable = solver::Answer::INDETERMINATE;
  solver::Answer so_stable = solver::Answer::INDETERMINATE;
  bool contradiction = false;   // definite SO verdict differs from the lift OR
  bool fully_decided = false;   // SO verdicts definite in both modes
};

struct Stats {
  long long points = 0;
  long long comparisons = 0;
  long long agreements = 0;
  long long indeterminate = 0;
  long long contradictions = 0;
  long long fully_decided_points = 0;
  long long fully_decided_equal = 0;
};

using Sink = std::function<void(const PointResult&)>;

// ex1: SU_2 triples on the grid a in {0, step, ..., 1/2}, a_1 <= a_2 <= a_3.
Stats run_ex1(const Rat& step, const solver::Options& opts, const Sink& sink = {});

// ex3: Sp_4 triples over pairs (a >= b) on the same grid, multiset order.
Stats run_ex3(const Rat& step, const solver::Options& opts, const Sink& sink = {});

// ex2: >= `samples` random SU_4 triples with denominator-8 angles.
Stats run_ex2(int samples, uint64_t seed, const solver::Options& opts,
              const Sink& sink = {});

}  // namespace dsp::crosscheck
