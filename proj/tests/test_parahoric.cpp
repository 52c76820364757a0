#include <algorithm>

#include "doctest.h"
#include "dsp/parahoric.hpp"

using namespace dsp;
using namespace dsp::parahoric;

namespace {

StandardConjugacyClass so_class(int n, std::vector<Rat> l) {
  StandardConjugacyClass c;
  c.group = Group::SO;
  c.n = n;
  c.lambdas = std::move(l);
  return c;
}

bool has_clause(const std::vector<Violation>& vs, const std::string& needle) {
  for (const auto& v : vs)
    if (v.clause.find(needle) != std::string::npos) return true;
  return false;
}

}  // namespace

TEST_CASE("class validation") {
  CHECK(validate(so_class(4, {Rat(-1, 4), Rat(0), Rat(0), Rat(1, 4)})).empty());
  CHECK(has_clause(validate(so_class(4, {Rat(-1, 4), Rat(0), Rat(0), Rat(1, 2)})),
                   "lambda_i + lambda_{n+1-i}"));
  CHECK(has_clause(validate(so_class(4, {Rat(-3, 4), Rat(0), Rat(0), Rat(3, 4)})),
                   "at most 1/2"));
  CHECK(has_clause(validate(so_class(2, {Rat(0), Rat(0)})), "n >= 3"));

  StandardConjugacyClass su;
  su.group = Group::SU;
  su.n = 3;
  su.lambdas = {Rat(-1, 3), Rat(0), Rat(1, 3)};
  CHECK(validate(su).empty());
  su.lambdas = {Rat(-1, 4), Rat(0), Rat(1, 3)};
  CHECK(has_clause(validate(su), "integer"));

  StandardConjugacyClass sp;
  sp.group = Group::Sp;
  sp.n = 3;
  sp.lambdas = {Rat(-1, 4), Rat(0), Rat(1, 4)};
  CHECK(has_clause(validate(sp), "even matrix size"));
}

TEST_CASE("datum validation names the failing clause") {
  ParabolicDatum d;
  d.group = Group::SO;
  d.n = 4;
  FlagPoint p;
  p.label = "p1";
  p.flag_dims = {2, 1};
  p.weights = {Rat(1, 4), Rat(3, 4)};
  d.points = {p};
  CHECK(validate(d).empty());

  // dim F^1 odd.
  d.points[0].flag_dims = {3, 1};
  CHECK(has_clause(validate(d), "dim F^1 must be even"));

  // Asymmetric weight multiset: {1/4 x1, 3/4 x2}.
  d.points[0].flag_dims = {3, 2};
  d.n = 5;
  CHECK(has_clause(validate(d), "symmetric about 1/2"));

  // Weight 1/2 with odd multiplicity.
  ParabolicDatum h;
  h.group = Group::SO;
  h.n = 5;
  FlagPoint q;
  q.flag_dims = {2, 1};
  q.weights = {Rat(1, 4), Rat(1, 2)};
  h.points = {q};
  auto vs = validate(h);
  CHECK(has_clause(vs, "weight-1/2 multiplicity"));
  CHECK(has_clause(vs, "symmetric about 1/2"));

  // Non-increasing weights.
  q.weights = {Rat(3, 4), Rat(1, 4)};
  h.points = {q};
  CHECK(has_clause(validate(h), "strictly increasing"));
}

TEST_CASE("class to datum and back") {
  auto cls = so_class(3, {Rat(-1, 4), Rat(0), Rat(1, 4)});
  auto d = class_to_datum({cls});
  REQUIRE(d.points.size() == 1);
  CHECK(d.points[0].flag_dims == std::vector<int>{2, 1});
  CHECK(d.points[0].weights == std::vector<Rat>{Rat(1, 4), Rat(3, 4)});

  // all-zero class: no flag.
  auto z = class_to_datum({so_class(3, {Rat(0), Rat(0), Rat(0)})});
  CHECK(z.points[0].flag_dims.empty());

  // Round trips on a small family of symmetric vectors.
  std::vector<std::vector<Rat>> grid = {
      {Rat(-1, 2), Rat(0), Rat(1, 2)},
      {Rat(-3, 8), Rat(-1, 8), Rat(1, 8), Rat(3, 8)},
      {Rat(-1, 2), Rat(-1, 2), Rat(1, 2), Rat(1, 2)},
      {Rat(-1, 3), Rat(0), Rat(0), Rat(0), Rat(1, 3)},
  };
  for (const auto& l : grid) {
    auto c = so_class(int(l.size()), l);
    auto back = datum_to_class(class_to_datum({c}));
    REQUIRE(back.size() == 1);
    CHECK(back[0].lambdas == l);
  }
}

TEST_CASE("transform weights") {
  ParabolicDatum d;
  d.group = Group::SO;
  d.n = 4;
  FlagPoint p;
  p.flag_dims = {2, 1};
  p.weights = {Rat(1, 8), Rat(7, 8)};
  d.points = {p};
  auto tw = transform_weights(d);
  CHECK(tw.per_point[0] ==
        std::vector<Rat>{Rat(-1, 8), Rat(0), Rat(0), Rat(1, 8)});

  // weight 1/2 with multiplicity 2 splits.
  FlagPoint q;
  q.flag_dims = {2};
  q.weights = {Rat(1, 2)};
  d.points = {q};
  tw = transform_weights(d);
  CHECK(tw.per_point[0] ==
        std::vector<Rat>{Rat(-1, 2), Rat(0), Rat(0), Rat(1, 2)});
}

TEST_CASE("underlying degree") {
  ParabolicDatum d;
  d.group = Group::SO;
  d.n = 6;
  for (int dim : {2, 4, 2}) {
    FlagPoint p;
    if (dim == 4) {
      p.flag_dims = {4, 2};
      p.weights = {Rat(1, 3), Rat(2, 3)};
    } else {
      p.flag_dims = {dim, dim / 2};
      p.weights = {Rat(1, 4), Rat(3, 4)};
    }
    d.points.push_back(p);
  }
  CHECK(underlying_degree(d) == -4);

  ParabolicDatum empty;
  empty.group = Group::SO;
  empty.n = 4;
  empty.points.push_back(FlagPoint{});
  CHECK(underlying_degree(empty) == 0);

  ParabolicDatum one;
  one.group = Group::SO;
  one.n = 4;
  FlagPoint p;
  p.flag_dims = {2, 1};
  p.weights = {Rat(1, 4), Rat(3, 4)};
  one.points = {p};
  CHECK(underlying_degree(one) == -1);
  CHECK(is_parabolic_reducible(one));

  FlagPoint h;
  h.flag_dims = {2};
  h.weights = {Rat(1, 2)};
  one.points.push_back(h);
  CHECK_FALSE(is_parabolic_reducible(one));
}

TEST_CASE("hecke flag transform matches the weight transform") {
  auto check_point = [](FlagPoint p, int n) {
    ParabolicDatum d;
    d.group = Group::SO;
    d.n = n;
    d.points = {p};
    auto tw = transform_weights(d).per_point[0];
    for (bool alt : {false, true}) {
      auto chain = hecke_flag_transform(p, n, alt);
      std::vector<Rat> multiset;
      int prev = 0;
      for (const auto& e : chain) {
        for (int t = prev; t < e.dim; ++t) multiset.push_back(e.weight);
        prev = e.dim;
      }
      for (int t = prev; t < n; ++t) multiset.push_back(Rat(0));
      std::sort(multiset.begin(), multiset.end());
      CHECK(multiset == tw);
    }
  };

  // even m: chain keeps length m+1.
  FlagPoint even;
  even.flag_dims = {2, 1};
  even.weights = {Rat(1, 8), Rat(7, 8)};
  CHECK(hecke_flag_transform(even, 4).size() == 3);
  check_point(even, 4);

  // odd m: length grows to m+2.
  FlagPoint odd;
  odd.flag_dims = {2};
  odd.weights = {Rat(1, 2)};
  CHECK(hecke_flag_transform(odd, 4).size() == 3);
  check_point(odd, 4);

  FlagPoint odd3;
  odd3.flag_dims = {6, 4, 2};
  odd3.weights = {Rat(1, 4), Rat(1, 2), Rat(3, 4)};
  CHECK(hecke_flag_transform(odd3, 8).size() == 5);
  check_point(odd3, 8);

  // empty flag: empty chain.
  CHECK(hecke_flag_transform(FlagPoint{}, 4).empty());
}

TEST_CASE("spin projection") {
  StandardConjugacyClass c;
  c.group = Group::Spin;
  c.n = 5;
  c.lambdas = {Rat(-1, 4), Rat(-1, 8), Rat(0), Rat(1, 8), Rat(1, 4)};
  auto so = spin_to_so({c});
  REQUIRE(so.size() == 1);
  CHECK(so[0].group == Group::SO);
  CHECK(so[0].lambdas == c.lambdas);
  CHECK_THROWS_AS(spin_to_so({so[0]}), ValidationError);
}
