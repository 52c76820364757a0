#include "dsp/parahoric.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace dsp::parahoric {

std::string group_name(Group g) {
  switch (g) {
    case Group::SU: return "SU";
    case Group::Sp: return "Sp";
    case Group::SO: return "SO";
    case Group::Spin: return "Spin";
  }
  return "?";
}

namespace {

const Rat kHalf(1, 2);
const Rat kOne(1);

bool is_orthogonal_kind(Group g) { return g == Group::SO || g == Group::Spin; }

// Graded weight multiset of a flag point: weight -> multiplicity, including
// the weight-zero piece G^0 of size n - dim F^1.
std::map<Rat, int, bool (*)(const Rat&, const Rat&)> graded_multiset(const FlagPoint& p,
                                                                     int n) {
  auto less = +[](const Rat& a, const Rat& b) { return a < b; };
  std::map<Rat, int, bool (*)(const Rat&, const Rat&)> mult(less);
  int m = int(p.flag_dims.size());
  for (int i = 0; i < m; ++i) {
    int next = i + 1 < m ? p.flag_dims[i + 1] : 0;
    mult[p.weights[i]] += p.flag_dims[i] - next;
  }
  mult[Rat(0)] += n - (m ? p.flag_dims[0] : 0);
  return mult;
}

}  // namespace

std::vector<Violation> validate(const StandardConjugacyClass& cls) {
  std::vector<Violation> v;
  auto flag = [&](const std::string& s) { v.push_back({s, -1}); };
  const int n = cls.n;
  if (n < 1) {
    flag("matrix size must be positive");
    return v;
  }
  if (cls.group == Group::SU && n < 2) flag("SU needs n >= 2");
  if (cls.group == Group::Sp && (n < 2 || n % 2 != 0)) flag("Sp needs even matrix size >= 2");
  if (is_orthogonal_kind(cls.group) && n < 3) flag("SO/Spin needs n >= 3");
  if (int(cls.lambdas.size()) != n) {
    flag("class size must equal n");
    return v;
  }
  for (int i = 0; i + 1 < n; ++i)
    if (cls.lambdas[i] > cls.lambdas[i + 1]) {
      flag("lambdas must be sorted ascending");
      break;
    }
  if (cls.group == Group::SU) {
    Rat sum(0);
    for (const auto& l : cls.lambdas) {
      sum += l;
      if (l <= Rat(-1) || l > kOne) flag("lambdas must lie in (-1,1]");
    }
    if (!sum.is_integer()) flag("sum of lambdas must be an integer");
  } else {
    for (int i = 0; i < n; ++i)
      if (!(cls.lambdas[i] + cls.lambdas[n - 1 - i]).is_zero()) {
        flag("lambda_i + lambda_{n+1-i} must vanish");
        break;
      }
    if (!cls.lambdas.empty() && cls.lambdas.back() > kHalf)
      flag("lambda_n must be at most 1/2");
  }
  return v;
}

std::vector<Violation> validate(const std::vector<StandardConjugacyClass>& classes) {
  std::vector<Violation> out;
  if (classes.empty()) {
    out.push_back({"at least one marked point is required", -1});
    return out;
  }
  for (size_t w = 0; w < classes.size(); ++w) {
    if (classes[w].group != classes[0].group || classes[w].n != classes[0].n)
      out.push_back({"all classes must share one group and size", int(w)});
    for (auto viol : validate(classes[w])) {
      viol.point = int(w);
      out.push_back(viol);
    }
  }
  return out;
}

std::vector<Violation> validate(const ParabolicDatum& datum) {
  std::vector<Violation> out;
  const int n = datum.n;
  if (n < 1) {
    out.push_back({"matrix size must be positive", -1});
    return out;
  }
  if (datum.group == Group::Sp && n % 2 != 0)
    out.push_back({"Sp needs even matrix size >= 2", -1});
  if (datum.points.empty()) out.push_back({"at least one marked point is required", -1});

  for (size_t w = 0; w < datum.points.size(); ++w) {
    const FlagPoint& p = datum.points[w];
    auto flag = [&](const std::string& s) { out.push_back({s, int(w)}); };
    const int m = int(p.flag_dims.size());
    if (int(p.weights.size()) != m) {
      flag("weight/flag count mismatch");
      continue;
    }
    bool dims_ok = true;
    for (int i = 0; i < m; ++i) {
      int next = i + 1 < m ? p.flag_dims[i + 1] : 0;
      if (p.flag_dims[i] <= next || p.flag_dims[i] > n) dims_ok = false;
    }
    if (!dims_ok) {
      flag("flag dims must be strictly decreasing within 0 < dim <= n");
      continue;
    }
    bool weights_ok = true;
    for (int i = 0; i < m; ++i) {
      if (p.weights[i] < Rat(0) || p.weights[i] >= kOne) weights_ok = false;
      if (i + 1 < m && !(p.weights[i] < p.weights[i + 1])) weights_ok = false;
    }
    if (!weights_ok) {
      flag("weights must be strictly increasing within [0,1)");
      continue;
    }
    if (datum.group == Group::SU) continue;  // no parity clauses for SU data

    if (m > 0 && p.flag_dims[0] % 2 != 0) flag("dim F^1 must be even");

    auto mult = graded_multiset(p, n);
    bool symmetric = true;
    for (const auto& [wt, d] : mult) {
      if (wt.is_zero()) continue;
      Rat partner = kOne - wt;
      auto it = mult.find(partner);
      int pd = it == mult.end() ? 0 : it->second;
      if (pd != d) symmetric = false;
    }
    if (!symmetric) flag("weight multiset must be symmetric about 1/2");

    auto half_it = mult.find(kHalf);
    if (half_it != mult.end() && half_it->second % 2 != 0)
      flag("weight-1/2 multiplicity must be even");

    int g0 = mult.at(Rat(0));
    if (is_orthogonal_kind(datum.group)) {
      if ((g0 - n) % 2 != 0) flag("dim G^0 must have the parity of n");
    } else if (datum.group == Group::Sp) {
      if (g0 % 2 != 0) flag("dim G^0 must be even");
    }
  }
  return out;
}

namespace {

std::string render(const std::vector<Violation>& vs) {
  std::ostringstream os;
  for (size_t i = 0; i < vs.size(); ++i) {
    if (i) os << "; ";
    if (vs[i].point >= 0) os << "point " << vs[i].point + 1 << ": ";
    os << vs[i].clause;
  }
  return os.str();
}

}  // namespace

void require_valid(const std::vector<StandardConjugacyClass>& classes) {
  auto v = validate(classes);
  if (!v.empty()) throw ValidationError(render(v));
}

void require_valid(const ParabolicDatum& datum) {
  auto v = validate(datum);
  if (!v.empty()) throw ValidationError(render(v));
}

ParabolicDatum class_to_datum(const std::vector<StandardConjugacyClass>& classes) {
  require_valid(classes);
  ParabolicDatum d;
  d.group = classes[0].group;
  d.n = classes[0].n;
  for (size_t w = 0; w < classes.size(); ++w) {
    FlagPoint p;
    p.label = "p" + std::to_string(w + 1);
    // lambda != 0 maps to the weight window [0,1): negative entries shift up.
    std::map<std::string, std::pair<Rat, int>> mult;
    for (const auto& l : classes[w].lambdas) {
      if (l.is_zero()) continue;
      Rat a = l.sign() < 0 ? l + kOne : l;
      mult[a.str()].first = a;
      mult[a.str()].second += 1;
    }
    std::vector<std::pair<Rat, int>> sorted;
    for (auto& [_, av] : mult) sorted.push_back(av);
    std::sort(sorted.begin(), sorted.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    int tail = 0;
    for (const auto& [a, c] : sorted) tail += c;
    for (const auto& [a, c] : sorted) {
      p.flag_dims.push_back(tail);
      p.weights.push_back(a);
      tail -= c;
    }
    d.points.push_back(std::move(p));
  }
  return d;
}

TransformedWeights transform_weights(const ParabolicDatum& datum) {
  require_valid(datum);
  TransformedWeights tw;
  for (size_t w = 0; w < datum.points.size(); ++w) {
    auto mult = graded_multiset(datum.points[w], datum.n);
    std::vector<Rat> vec;
    for (const auto& [wt, d] : mult) {
      if (wt == kHalf) {
        if (d % 2 != 0)
          throw ValidationError("OddHalfMultiplicity: weight-1/2 multiplicity is odd at point " +
                                std::to_string(w + 1));
        for (int t = 0; t < d / 2; ++t) {
          vec.push_back(kHalf);
          vec.push_back(-kHalf);
        }
      } else if (wt > kHalf) {
        for (int t = 0; t < d; ++t) vec.push_back(wt - kOne);
      } else {
        for (int t = 0; t < d; ++t) vec.push_back(wt);
      }
    }
    std::sort(vec.begin(), vec.end());
    tw.per_point.push_back(std::move(vec));
  }
  return tw;
}

std::vector<StandardConjugacyClass> datum_to_class(const ParabolicDatum& datum) {
  auto tw = transform_weights(datum);
  std::vector<StandardConjugacyClass> out;
  for (auto& vec : tw.per_point) {
    StandardConjugacyClass c;
    c.group = datum.group;
    c.n = datum.n;
    c.lambdas = std::move(vec);
    out.push_back(std::move(c));
  }
  return out;
}

long long underlying_degree(const ParabolicDatum& datum) {
  require_valid(datum);
  long long sum = 0;
  for (const auto& p : datum.points)
    if (!p.flag_dims.empty()) sum += p.flag_dims[0];
  if (sum % 2 != 0)
    throw ValidationError("NonIntegral: total dim F^1 over the points is odd");
  return -sum / 2;
}

bool is_parabolic_reducible(const ParabolicDatum& datum) {
  require_valid(datum);
  for (const auto& p : datum.points)
    for (const auto& wt : p.weights)
      if (wt == kHalf) return false;
  return true;
}

std::vector<HeckeChainEntry> hecke_flag_transform(const FlagPoint& point, int n,
                                                  bool alternate_choice) {
  // The chain depends on the choice of maximal isotropic K inside F^1 only
  // through subspaces, never through dims or weights; alternate_choice is kept
  // so callers can assert that invariance.
  (void)alternate_choice;
  const int m = int(point.flag_dims.size());
  std::vector<HeckeChainEntry> chain;
  if (m == 0) return chain;
  const int d1 = point.flag_dims[0];
  if (d1 % 2 != 0)
    throw ValidationError("dim F^1 must be even for the Hecke modification");
  const int half = d1 / 2;
  auto dim_of = [&](int i) { return i == 0 ? n : point.flag_dims[i - 1]; };

  const bool odd = m % 2 != 0;
  const int klo = odd ? (m + 1) / 2 : m / 2;  // kernel-side flag indices 1..klo
  const int kup = odd ? (m + 3) / 2 : m / 2 + 1;  // pullback-side m..kup

  for (int i = klo; i >= 1; --i)
    chain.push_back({dim_of(i) - half, point.weights[i - 1], true});
  if (n - half > d1 - half) chain.push_back({n - half, Rat(0), true});
  for (int i = m; i >= kup; --i)
    chain.push_back({n - half + dim_of(i), point.weights[i - 1] - kOne, false});
  if (odd) chain.push_back({n, point.weights[(m + 1) / 2 - 1] - kOne, false});

  for (size_t i = 0; i + 1 < chain.size(); ++i)
    if (chain[i].dim >= chain[i + 1].dim)
      throw ValidationError("Hecke chain failed to be strictly increasing");
  return chain;
}

std::vector<StandardConjugacyClass> spin_to_so(
    const std::vector<StandardConjugacyClass>& classes) {
  require_valid(classes);
  std::vector<StandardConjugacyClass> out = classes;
  for (auto& c : out) {
    if (c.group != Group::Spin)
      throw ValidationError("spin_to_so expects Spin classes");
    c.group = Group::SO;
  }
  return out;
}

}  // namespace dsp::parahoric
