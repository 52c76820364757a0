#include "doctest.h"
#include "dsp/solver.hpp"

using namespace dsp;
using namespace dsp::solver;
using parahoric::Group;
using parahoric::StandardConjugacyClass;

namespace {

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

// Closed-form SU(2) oracle: semistable iff 2 max <= sum and sum <= 1.
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

}  // namespace

TEST_CASE("slope convention anchor") {
  // SU(2), three classes (-a_w, a_w): conditioning one point at d=0 gives
  // a_1 - a_2 - a_3.
  auto classes = su2_triple(Rat(1, 4), Rat(1, 8), Rat(1, 16));
  auto beta = descending_weights(classes);
  SchubertState st;
  st.r = 1;
  st.d = 0;
  st.index_sets = {{1}, {2}, {2}};
  CHECK(slope_term(beta, st) == Rat(1, 4) - Rat(1, 8) - Rat(1, 16));
  st.index_sets = {{1}, {1}, {1}};
  st.d = 1;
  CHECK(slope_term(beta, st) == Rat(1, 4) + Rat(1, 8) + Rat(1, 16) - Rat(1));
  // d increments decrease the slope by exactly one.
  SchubertState st2 = st;
  st2.d = 2;
  CHECK(slope_term(beta, st) - slope_term(beta, st2) == Rat(1));
}

TEST_CASE("SU(2) grid matches the polygon inequalities") {
  for (int i = 0; i <= 4; ++i)
    for (int j = 0; j <= 4; ++j)
      for (int k = 0; k <= 4; ++k) {
        Rat a1(i, 8), a2(j, 8), a3(k, 8);
        auto v = decide_sl(su2_triple(a1, a2, a3));
        CHECK(v.semistable.answer ==
              (su2_semistable(a1, a2, a3) ? Answer::YES : Answer::NO));
        CHECK(v.stable.answer == (su2_stable(a1, a2, a3) ? Answer::YES : Answer::NO));
      }
}

TEST_CASE("quaternion triple is stable") {
  auto v = decide_sl(su2_triple(Rat(1, 4), Rat(1, 4), Rat(1, 4)));
  CHECK(v.semistable.answer == Answer::YES);
  CHECK(v.stable.answer == Answer::YES);
}

TEST_CASE("single point forces the trivial class") {
  auto v = decide_sp({cls(Group::Sp, {Rat(-1, 4), Rat(1, 4)})});
  CHECK(v.semistable.answer == Answer::NO);
  REQUIRE(v.semistable.branches[0].violation.has_value());

  auto t = decide_sp({cls(Group::Sp, {Rat(0), Rat(0)})});
  CHECK(t.semistable.answer == Answer::YES);
  CHECK(t.stable.answer == Answer::NO);
}

TEST_CASE("Sp_2 equals SU_2 on the quaternion instance") {
  std::vector<StandardConjugacyClass> sp;
  for (int w = 0; w < 3; ++w) sp.push_back(cls(Group::Sp, {Rat(-1, 4), Rat(1, 4)}));
  auto v = decide_sp(sp);
  CHECK(v.semistable.answer == Answer::YES);
  CHECK(v.stable.answer == Answer::YES);
}

TEST_CASE("trivial classes: semistable yes, stable no") {
  for (auto g : {Group::Sp, Group::SO}) {
    int n = g == Group::Sp ? 4 : 5;
    std::vector<StandardConjugacyClass> t;
    for (int w = 0; w < 3; ++w) t.push_back(cls(g, std::vector<Rat>(n, Rat(0))));
    auto v = decide(t);
    CHECK(v.semistable.answer == Answer::YES);
    CHECK(v.stable.answer == Answer::NO);
  }
}

TEST_CASE("SO_3 image of the quaternion instance") {
  std::vector<StandardConjugacyClass> so3;
  for (int w = 0; w < 3; ++w)
    so3.push_back(cls(Group::SO, {Rat(-1, 2), Rat(0), Rat(1, 2)}));
  auto v = decide_so(so3);
  CHECK(v.semistable.answer == Answer::YES);
  CHECK(v.stable.answer == Answer::YES);
}

TEST_CASE("spin delegates to SO with identical verdicts") {
  std::vector<StandardConjugacyClass> spin, so;
  for (int w = 0; w < 3; ++w) {
    spin.push_back(cls(Group::Spin, {Rat(-1, 4), Rat(0), Rat(1, 4)}));
    so.push_back(cls(Group::SO, {Rat(-1, 4), Rat(0), Rat(1, 4)}));
  }
  CHECK(decide_spin(spin) == decide_so(so));
}

TEST_CASE("weight maps") {
  auto so3 = weight_map_so3(su2_triple(Rat(1, 8), Rat(1, 8), Rat(1, 8)));
  CHECK(so3[0].lambdas == std::vector<Rat>{Rat(-1, 4), Rat(0), Rat(1, 4)});
  // Folding: a = 3/8 doubles to 3/4, which folds to 1/4.
  auto folded = weight_map_so3(su2_triple(Rat(3, 8), Rat(0), Rat(0)));
  CHECK(folded[0].lambdas == std::vector<Rat>{Rat(-1, 4), Rat(0), Rat(1, 4)});

  std::vector<StandardConjugacyClass> sp4 = {
      cls(Group::Sp, {Rat(-3, 8), Rat(-1, 8), Rat(1, 8), Rat(3, 8)})};
  auto so5 = weight_map_so5(sp4);
  CHECK(so5[0].lambdas ==
        std::vector<Rat>{Rat(-1, 2), Rat(-1, 4), Rat(0), Rat(1, 4), Rat(1, 2)});

  std::vector<StandardConjugacyClass> su4 = {
      cls(Group::SU, {Rat(-1, 4), Rat(-1, 8), Rat(1, 8), Rat(1, 4)})};
  auto so6 = weight_map_so6(su4);
  CHECK(so6[0].n == 6);
  for (int i = 0; i < 6; ++i)
    CHECK((so6[0].lambdas[i] + so6[0].lambdas[5 - i]).is_zero());

  auto lifts = lifts_of_so3(so3);
  CHECK(lifts.size() == 8);  // 2 lifts per point, all distinct
  auto lifts5 = lifts_of_so5(so5);
  CHECK(!lifts5.empty());
  auto twists = su4_center_twists(su4);
  CHECK(twists.size() == 2);  // one point, two center choices
}

TEST_CASE("enumeration counts are stable") {
  std::vector<StandardConjugacyClass> sp4;
  for (int w = 0; w < 3; ++w)
    sp4.push_back(cls(Group::Sp, {Rat(-1, 2), Rat(-1, 4), Rat(1, 4), Rat(1, 2)}));
  long long count = 0;
  auto info = enumerate_states(sp4, false, [&](const SchubertState&) {
    ++count;
    return true;
  });
  CHECK(info.total == count);
  // Golden value: IG(1,4) and IG(2,4) have 4 classes each; the exact degree
  // bounds are floor(3 * 1/2) = 1 for r=1 and floor(3 * 3/4) = 2 for r=2, so
  // the count is 4^3*2 + 4^3*3 = 320.
  CHECK(count == 320);
  CHECK(info.d_max == 2);
}

TEST_CASE("degree bound completeness spot check") {
  auto classes = su2_triple(Rat(1, 2), Rat(3, 8), Rat(1, 4));
  auto beta = descending_weights(classes);
  // d_max for r=1 is floor(1/2+3/8+1/4) = 1; any state at d_max+1 has
  // slope <= 0.
  long long checked = 0;
  enumerate_states(classes, false, [&](const SchubertState& st) {
    SchubertState bumped = st;
    bumped.d = 2;
    CHECK(slope_term(beta, bumped) <= Rat(0));
    ++checked;
    return checked < 500;
  });
  CHECK(checked > 0);
}

TEST_CASE("monotone weakening never flips semistable YES to NO") {
  // Scale all classes toward zero; verdicts can only improve.
  for (auto [i, j, k] : std::vector<std::array<int, 3>>{{2, 2, 2}, {4, 3, 2}, {4, 4, 4}}) {
    auto strong = su2_triple(Rat(i, 8), Rat(j, 8), Rat(k, 8));
    auto weak = su2_triple(Rat(i, 16), Rat(j, 16), Rat(k, 16));
    if (decide_sl(strong).semistable.answer == Answer::YES)
      CHECK(decide_sl(weak).semistable.answer == Answer::YES);
  }
}
