#pragma once

// The decision procedures: enumerate Schubert states with explicit degree
// bounds, gate each state on its Gromov-Witten data, test the slope
// inequality, and assemble verdicts for SU_n, Sp_2n, SO_n and Spin_n.
//
// Slope convention: with the transformed weights of a point sorted in
// DECREASING order beta_1 >= ... >= beta_n, a state contributes
//
//   slope = sum_w sum_{i in I_w} beta^w_i  -  d.
//
// Index sets use the incidence convention of the quantum module, where
// {n-r+1..n} is the vacuous condition; level i of the reference flag carries
// the i-th largest weight, so a vacuous condition picks up the r smallest
// weights.  (Anchor: for SU(2) with three classes (-a_w, a_w), the d=0 state
// conditioning one point gives a_1 - a_2 - a_3 <= 0, one of the classical
// triangle inequalities.)
//
// Existence is equivalent to: every gated state has slope <= 0 (semistable)
// or < 0 (stable).  The gate is GW number exactly one for semistability and
// "nonzero or infinite" for stability.  SO_n has a second branch of states on
// the twisted bundle O(1)+O(-1)+O^{n-2}; when its evaluator cannot decide a
// state whose slope could violate, the branch is Unknown and the verdict may
// be INDETERMINATE.

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "dsp/liealg.hpp"
#include "dsp/num.hpp"
#include "dsp/parahoric.hpp"
#include "dsp/twisted.hpp"

namespace dsp::solver {

enum class Answer { YES, NO, INDETERMINATE };
enum class Branch { Trivial, Twisted };
enum class Mode { Semistable, Stable };

std::string answer_name(Answer a);

struct SchubertState {
  int r = 1;
  int d = 0;
  Branch branch = Branch::Trivial;
  liealg::Component component = liealg::Component::Whole;
  std::vector<std::vector<int>> index_sets;  // one per marked point

  bool operator==(const SchubertState&) const = default;
};

struct WitnessInequality {
  SchubertState state;
  Rat slope;
  std::string gate;  // rendered GW value / status that fired the gate
  Mode mode = Mode::Semistable;

  bool operator==(const WitnessInequality&) const = default;
};

struct BranchReport {
  Branch branch = Branch::Trivial;
  Answer holds = Answer::YES;  // does the branch's full condition set hold
  std::optional<WitnessInequality> violation;
  long long states_enumerated = 0;
  long long gates_tested = 0;
  long long unknown_gates = 0;  // undecided twisted gates that could violate

  bool operator==(const BranchReport&) const = default;
};

struct ModeVerdict {
  Answer answer = Answer::INDETERMINATE;
  std::vector<BranchReport> branches;

  bool operator==(const ModeVerdict&) const = default;
};

struct Verdict {
  ModeVerdict semistable;
  ModeVerdict stable;

  bool operator==(const Verdict&) const = default;
};

struct Options {
  bool twisted_oracle = true;
  int threads = 1;
  uint64_t seed = 0x9d5f2c01u;
};

// Exact slope of a state against per-point weights sorted descending.
Rat slope_term(const std::vector<std::vector<Rat>>& beta_desc, const SchubertState& st);

// Descending transformed weight vectors of validated classes.
std::vector<std::vector<Rat>> descending_weights(
    const std::vector<parahoric::StandardConjugacyClass>& classes);

// Deterministic enumeration of all states for a problem; used by the deciders
// and exposed for the completeness assertions.  d ranges over
// [d_min(branch), d_max] with d_max the exact per-problem bound
// floor(max_state slope + d); callback may return false to stop.
struct StateEnumeration {
  long long total = 0;
  int d_max = 0;
};
StateEnumeration enumerate_states(
    const std::vector<parahoric::StandardConjugacyClass>& classes, bool with_twisted,
    const std::function<bool(const SchubertState&)>& sink);

Verdict decide_sl(const std::vector<parahoric::StandardConjugacyClass>& classes,
                  const Options& opts = {});
Verdict decide_sp(const std::vector<parahoric::StandardConjugacyClass>& classes,
                  const Options& opts = {});
Verdict decide_so(const std::vector<parahoric::StandardConjugacyClass>& classes,
                  const Options& opts = {});
Verdict decide_spin(const std::vector<parahoric::StandardConjugacyClass>& classes,
                    const Options& opts = {});
Verdict decide(const std::vector<parahoric::StandardConjugacyClass>& classes,
               const Options& opts = {});

// Weight maps between the exceptional-isogeny problems.
std::vector<parahoric::StandardConjugacyClass> weight_map_so3(
    const std::vector<parahoric::StandardConjugacyClass>& su2);
std::vector<parahoric::StandardConjugacyClass> weight_map_so5(
    const std::vector<parahoric::StandardConjugacyClass>& sp4);
std::vector<parahoric::StandardConjugacyClass> weight_map_so6(
    const std::vector<parahoric::StandardConjugacyClass>& su4);

// All simply-connected-side lifts of a mapped problem (2^k sign choices,
// deduplicated); existence on the SO side is equivalent to existence for some
// lift.
std::vector<std::vector<parahoric::StandardConjugacyClass>> lifts_of_so3(
    const std::vector<parahoric::StandardConjugacyClass>& so3);
std::vector<std::vector<parahoric::StandardConjugacyClass>> lifts_of_so5(
    const std::vector<parahoric::StandardConjugacyClass>& so5);
// ex2 goes the other way: the two SU_4 classes lambda and lambda + 1/2
// (renormalized) induce the same SO_6 class, so the lift set expands the
// source data by per-point center twists.
std::vector<std::vector<parahoric::StandardConjugacyClass>> su4_center_twists(
    const std::vector<parahoric::StandardConjugacyClass>& su4);

}  // namespace dsp::solver
