#include "dsp/liealg.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <mutex>
#include <numeric>
#include <sstream>

namespace dsp::liealg {

namespace {

// Exact solve A x = b for square-ish systems over Q; A given column-wise as
// the simple roots. Returns expansion coefficients; throws on inconsistency.
std::vector<Rat> expand_in_basis(const std::vector<IntVec>& basis, const IntVec& v) {
  const size_t m = basis.size();
  const size_t n = v.size();
  std::vector<std::vector<Rat>> aug(n, std::vector<Rat>(m + 1));
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < m; ++j) aug[i][j] = Rat(basis[j][i]);
    aug[i][m] = Rat(v[i]);
  }
  std::vector<int> pivot_col_of_row;
  size_t row = 0;
  for (size_t col = 0; col < m && row < n; ++col) {
    size_t sel = row;
    while (sel < n && aug[sel][col].is_zero()) ++sel;
    if (sel == n) continue;
    std::swap(aug[sel], aug[row]);
    Rat p = aug[row][col];
    for (size_t j = col; j <= m; ++j) aug[row][j] /= p;
    for (size_t i = 0; i < n; ++i) {
      if (i == row || aug[i][col].is_zero()) continue;
      Rat f = aug[i][col];
      for (size_t j = col; j <= m; ++j) aug[i][j] -= f * aug[row][j];
    }
    pivot_col_of_row.push_back(int(col));
    ++row;
  }
  for (size_t i = row; i < n; ++i)
    if (!aug[i][m].is_zero()) throw std::runtime_error("vector outside root span");
  std::vector<Rat> x(m, Rat(0));
  for (size_t i = 0; i < pivot_col_of_row.size(); ++i) x[pivot_col_of_row[i]] = aug[i][m];
  return x;
}

int dot(const IntVec& a, const IntVec& b) {
  int s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

bool first_nonzero_negative(const IntVec& v) {
  for (int x : v) {
    if (x > 0) return false;
    if (x < 0) return true;
  }
  return false;
}

std::string key_of(const std::vector<int>& one_line) {
  std::string k;
  k.reserve(one_line.size());
  for (int x : one_line) k.push_back(char(x + 64));
  return k;
}

}  // namespace

std::string family_name(Family f) {
  switch (f) {
    case Family::A: return "A";
    case Family::B: return "B";
    case Family::C: return "C";
    case Family::D: return "D";
  }
  return "?";
}

std::vector<IntVec> RootSystem::all_roots() const {
  std::vector<IntVec> out = positive_roots;
  for (const auto& r : positive_roots) {
    IntVec neg(r.size());
    for (size_t i = 0; i < r.size(); ++i) neg[i] = -r[i];
    out.push_back(neg);
  }
  return out;
}

RootSystem RootSystem::build(Family f, int rank) {
  // Desk-scale caps; the CLI rejects larger inputs before reaching here.
  const int cap = f == Family::A ? 7 : 5;
  if (rank < 1 || (f == Family::D && rank < 2))
    throw UnsupportedRank(family_name(f) + "_" + std::to_string(rank) + " is not supported");
  if (rank > cap)
    throw UnsupportedRank(family_name(f) + "_" + std::to_string(rank) +
                          " exceeds the desk-scale rank cap");

  RootSystem rs;
  rs.family = f;
  rs.rank = rank;
  rs.letters = f == Family::A ? rank + 1 : rank;
  const int n = rs.letters;

  auto e = [&](int i) {
    IntVec v(n, 0);
    v[i - 1] = 1;
    return v;
  };
  auto add = [&](IntVec a, const IntVec& b, int sb) {
    for (int i = 0; i < n; ++i) a[i] += sb * b[i];
    return a;
  };

  switch (f) {
    case Family::A:
      for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
          rs.positive_roots.push_back(add(e(i), e(j), -1));
          rs.positive_coroots.push_back(rs.positive_roots.back());
        }
      for (int i = 1; i < n; ++i) rs.simple_roots.push_back(add(e(i), e(i + 1), -1));
      break;
    case Family::B:
      for (int i = 1; i <= n; ++i) {
        rs.positive_roots.push_back(e(i));  // short
        rs.positive_coroots.push_back(add(e(i), e(i), 1));
      }
      for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
          rs.positive_roots.push_back(add(e(i), e(j), -1));
          rs.positive_coroots.push_back(rs.positive_roots.back());
          rs.positive_roots.push_back(add(e(i), e(j), 1));
          rs.positive_coroots.push_back(rs.positive_roots.back());
        }
      for (int i = 1; i < n; ++i) rs.simple_roots.push_back(add(e(i), e(i + 1), -1));
      rs.simple_roots.push_back(e(n));
      break;
    case Family::C:
      for (int i = 1; i <= n; ++i) {
        rs.positive_roots.push_back(add(e(i), e(i), 1));  // long: 2 e_i
        rs.positive_coroots.push_back(e(i));
      }
      for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
          rs.positive_roots.push_back(add(e(i), e(j), -1));
          rs.positive_coroots.push_back(rs.positive_roots.back());
          rs.positive_roots.push_back(add(e(i), e(j), 1));
          rs.positive_coroots.push_back(rs.positive_roots.back());
        }
      for (int i = 1; i < n; ++i) rs.simple_roots.push_back(add(e(i), e(i + 1), -1));
      rs.simple_roots.push_back(add(e(n), e(n), 1));
      break;
    case Family::D:
      for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
          rs.positive_roots.push_back(add(e(i), e(j), -1));
          rs.positive_coroots.push_back(rs.positive_roots.back());
          rs.positive_roots.push_back(add(e(i), e(j), 1));
          rs.positive_coroots.push_back(rs.positive_roots.back());
        }
      for (int i = 1; i < n; ++i) rs.simple_roots.push_back(add(e(i), e(i + 1), -1));
      rs.simple_roots.push_back(add(e(n - 1), e(n), 1));
      break;
  }

  for (const auto& a : rs.simple_roots) {
    int norm = dot(a, a);
    IntVec cr(a.size());
    for (size_t i = 0; i < a.size(); ++i) {
      if ((2 * a[i]) % norm != 0) throw std::runtime_error("non-integral coroot");
      cr[i] = 2 * a[i] / norm;
    }
    rs.simple_coroots.push_back(cr);
  }

  // Closed-form root counts per family.
  int expected = f == Family::A   ? rank * (rank + 1)
                 : f == Family::D ? 2 * rank * (rank - 1)
                                  : 2 * rank * rank;
  if (int(rs.positive_roots.size()) * 2 != expected)
    throw std::runtime_error("root count mismatch");

  IntVec two_rho(n, 0);
  for (const auto& r : rs.positive_roots)
    for (int i = 0; i < n; ++i) two_rho[i] += r[i];

  for (size_t k = 0; k < rs.positive_roots.size(); ++k) {
    rs.two_rho_pairing.push_back(dot(two_rho, rs.positive_coroots[k]));
    auto coeffs = expand_in_basis(rs.simple_roots, rs.positive_roots[k]);
    std::vector<int> ic;
    for (const auto& c : coeffs) {
      if (!c.is_integer()) throw std::runtime_error("non-integral root expansion");
      ic.push_back(int(c.num().to_ll()));
    }
    rs.pos_in_simple.push_back(ic);
    auto cocoeffs = expand_in_basis(rs.simple_coroots, rs.positive_coroots[k]);
    std::vector<int> cc;
    for (const auto& c : cocoeffs) {
      if (!c.is_integer()) throw std::runtime_error("non-integral coroot expansion");
      cc.push_back(int(c.num().to_ll()));
    }
    rs.pos_coroot_in_simple.push_back(cc);
  }
  return rs;
}

WeylGroup::WeylGroup(RootSystem rs) : rs_(std::move(rs)) {
  const int n = rs_.letters;
  std::vector<int> id(n);
  std::iota(id.begin(), id.end(), 1);
  elements_.push_back(id);
  index_[key_of(id)] = 0;

  // One-line form of each simple reflection.
  std::vector<std::vector<int>> simple_lines;
  for (const auto& a : rs_.simple_roots) {
    std::vector<int> line(n);
    for (int i = 1; i <= n; ++i) {
      IntVec v(n, 0);
      v[i - 1] = 1;
      int pairing = 2 * dot(v, a) / dot(a, a);
      IntVec img = v;
      for (int t = 0; t < n; ++t) img[t] -= pairing * a[t];
      int where = 0, sign = 0;
      for (int t = 0; t < n; ++t)
        if (img[t] != 0) {
          where = t + 1;
          sign = img[t];
        }
      line[i - 1] = sign > 0 ? where : -where;
    }
    simple_lines.push_back(line);
  }

  auto compose_lines = [&](const std::vector<int>& u, const std::vector<int>& w) {
    // (u*w)(i) = u(w(i))
    std::vector<int> out(n);
    for (int i = 0; i < n; ++i) {
      int t = w[i];
      out[i] = t > 0 ? u[t - 1] : -u[-t - 1];
    }
    return out;
  };

  // BFS over right multiplication by simple reflections.
  for (size_t head = 0; head < elements_.size(); ++head) {
    auto cur = elements_[head];
    for (const auto& s : simple_lines) {
      auto nxt = compose_lines(cur, s);
      auto k = key_of(nxt);
      if (!index_.count(k)) {
        index_[k] = int(elements_.size());
        elements_.push_back(nxt);
      }
    }
  }

  lengths_.resize(elements_.size());
  for (size_t w = 0; w < elements_.size(); ++w) {
    int l = 0;
    for (const auto& r : rs_.positive_roots)
      if (root_sent_negative(int(w), r)) ++l;
    lengths_[w] = l;
  }

  for (const auto& s : simple_lines) simple_refl_.push_back(index_.at(key_of(s)));

  for (const auto& a : rs_.positive_roots) {
    std::vector<int> line(n);
    int norm = dot(a, a);
    for (int i = 1; i <= n; ++i) {
      IntVec v(n, 0);
      v[i - 1] = 1;
      int pairing = 2 * dot(v, a) / norm;
      IntVec img = v;
      for (int t = 0; t < n; ++t) img[t] -= pairing * a[t];
      int where = 0, sign = 0;
      for (int t = 0; t < n; ++t)
        if (img[t] != 0) {
          where = t + 1;
          sign = img[t];
        }
      line[i - 1] = sign > 0 ? where : -where;
    }
    pos_refl_.push_back(index_.at(key_of(line)));
  }

  int best = 0;
  for (size_t w = 0; w < elements_.size(); ++w)
    if (lengths_[w] > lengths_[best]) best = int(w);
  longest_ = int(best);
}

bool WeylGroup::root_sent_negative(int w, const IntVec& root) const {
  return first_nonzero_negative(apply(w, root));
}

IntVec WeylGroup::apply(int w, const IntVec& v) const {
  const auto& line = elements_[w];
  IntVec out(v.size(), 0);
  for (size_t i = 0; i < v.size(); ++i) {
    int t = line[i];
    if (t > 0)
      out[t - 1] += v[i];
    else
      out[-t - 1] -= v[i];
  }
  return out;
}

int WeylGroup::apply_letter(int w, int l) const {
  const auto& line = elements_[w];
  return l > 0 ? line[l - 1] : -line[-l - 1];
}

int WeylGroup::compose(int u, int w) const {
  const auto& lu = elements_[u];
  const auto& lw = elements_[w];
  std::vector<int> out(lu.size());
  for (size_t i = 0; i < lu.size(); ++i) {
    int t = lw[i];
    out[i] = t > 0 ? lu[t - 1] : -lu[-t - 1];
  }
  return index_.at(key_of(out));
}

int WeylGroup::inverse(int w) const {
  const auto& lw = elements_[w];
  std::vector<int> out(lw.size());
  for (size_t i = 0; i < lw.size(); ++i) {
    int t = lw[i];
    if (t > 0)
      out[t - 1] = int(i) + 1;
    else
      out[-t - 1] = -(int(i) + 1);
  }
  return index_.at(key_of(out));
}

bool WeylGroup::right_descent(int w, int node) const {
  return root_sent_negative(w, rs_.simple_roots[node - 1]);
}

int WeylGroup::longest_parabolic(const std::vector<int>& nodes) const {
  int w = identity();
  bool moved = true;
  while (moved) {
    moved = false;
    for (int node : nodes) {
      if (!right_descent(w, node)) {
        w = compose(w, simple_reflection(node));
        moved = true;
      }
    }
  }
  return w;
}

int WeylGroup::coset_min(int w, const std::vector<int>& nodes) const {
  bool moved = true;
  while (moved) {
    moved = false;
    for (int node : nodes) {
      if (right_descent(w, node)) {
        w = compose(w, simple_reflection(node));
        moved = true;
      }
    }
  }
  return w;
}

bool WeylGroup::bruhat_leq(int u, int w) const {
  if (u == w) return true;
  if (lengths_[u] >= lengths_[w]) return false;
  uint64_t key = uint64_t(u) * uint64_t(size()) + uint64_t(w);
  auto it = bruhat_memo_.find(key);
  if (it != bruhat_memo_.end()) return it->second;
  // Standard lifting recursion on any right descent of w.
  int node = 0;
  for (int i = 1; i <= rs_.rank; ++i)
    if (right_descent(w, i)) {
      node = i;
      break;
    }
  int ws = compose(w, simple_reflection(node));
  int us = compose(u, simple_reflection(node));
  bool res = lengths_[us] < lengths_[u] ? bruhat_leq(us, ws) : bruhat_leq(u, ws);
  bruhat_memo_[key] = res;
  return res;
}

int WeylGroup::element_id(const std::vector<int>& one_line) const {
  auto it = index_.find(key_of(one_line));
  return it == index_.end() ? -1 : it->second;
}

std::shared_ptr<WeylGroup> shared_weyl_group(Family f, int rank) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, std::shared_ptr<WeylGroup>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(int(f), rank);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  auto wg = std::make_shared<WeylGroup>(RootSystem::build(f, rank));
  cache[key] = wg;
  return wg;
}

int GrassmannianSpace::basis_pos_of_rep(int rep) const {
  for (size_t i = 0; i < basis.size(); ++i)
    if (basis[i] == rep) return int(i);
  throw std::runtime_error("element is not a minimal representative of this space");
}

int GrassmannianSpace::basis_pos_of_index_set(const std::vector<int>& I) const {
  std::vector<int> s = I;
  std::sort(s.begin(), s.end());
  auto it = index_lookup.find(s);
  if (it != index_lookup.end()) return it->second;
  // Name the failing clause.
  if (int(s.size()) != r)
    throw InadmissibleIndexSet("index set has size " + std::to_string(s.size()) +
                               ", expected " + std::to_string(r));
  for (size_t i = 0; i + 1 < s.size(); ++i)
    if (s[i] == s[i + 1]) throw InadmissibleIndexSet("index set has repeated entries");
  for (int v : s)
    if (v < 1 || v > ambient)
      throw InadmissibleIndexSet("index " + std::to_string(v) + " outside 1.." +
                                 std::to_string(ambient));
  if (family != Family::A) {
    for (int v : s) {
      if (2 * v == ambient + 1)
        throw InadmissibleIndexSet("index " + std::to_string(v) +
                                   " is the non-isotropic middle position");
      if (std::binary_search(s.begin(), s.end(), ambient + 1 - v) && 2 * v < ambient + 1)
        throw InadmissibleIndexSet("indices " + std::to_string(v) + " and " +
                                   std::to_string(ambient + 1 - v) +
                                   " pair non-trivially under the form");
    }
  }
  if (family == Family::D && r == group_rank)
    throw InadmissibleIndexSet("index set belongs to the other family of maximal isotropics");
  throw InadmissibleIndexSet("index set does not label an isotropic Schubert cell");
}

std::vector<int> GrassmannianSpace::divisor_positions() const {
  std::vector<int> out;
  for (int i = 0; i < num_classes(); ++i)
    if (codims[i] == 1) out.push_back(i);
  return out;
}

const std::vector<int>& GrassmannianSpace::down_set(int pos) const {
  if (down_sets_.empty()) down_sets_.resize(basis.size());
  if (down_sets_[pos].empty()) {
    std::vector<int> d;
    for (int q = 0; q < num_classes(); ++q)
      if (W->bruhat_leq(basis[q], basis[pos])) d.push_back(q);
    down_sets_[pos] = d;
  }
  return down_sets_[pos];
}

std::string GrassmannianSpace::name() const {
  std::ostringstream os;
  switch (family) {
    case Family::A: os << "Gr(" << r << "," << ambient << ")"; break;
    case Family::B:
    case Family::D: os << "OG(" << r << "," << ambient << ")"; break;
    case Family::C: os << "IG(" << r << "," << ambient << ")"; break;
  }
  if (component == Component::Plus) os << "+";
  if (component == Component::Minus) os << "-";
  return os.str();
}

namespace {

// Position of a signed label in the ambient flag coordinate order.
int label_position(Family f, int ambient, int label) {
  if (f == Family::A) return label;
  return label > 0 ? label : ambient + 1 - (-label);
}

// Combinatorially admissible index sets, used to cross-check the enumeration
// coming from minimal representatives.
std::vector<std::vector<int>> admissible_sets(Family f, int m, int r, int ambient,
                                              Component comp) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  std::function<void(int)> rec = [&](int start) {
    if (int(cur.size()) == r) {
      out.push_back(cur);
      return;
    }
    for (int v = start; v <= ambient; ++v) {
      if (f != Family::A) {
        if (2 * v == ambient + 1) continue;
        bool paired = false;
        for (int u : cur)
          if (u + v == ambient + 1) paired = true;
        if (paired) continue;
      }
      cur.push_back(v);
      rec(v + 1);
      cur.pop_back();
    }
  };
  rec(1);
  if (f == Family::D && r == m) {
    std::vector<std::vector<int>> filtered;
    for (auto& I : out) {
      int negs = 0;
      for (int v : I)
        if (v > m) ++negs;
      bool plus = negs % 2 == 0;
      if ((comp == Component::Plus) == plus) filtered.push_back(I);
    }
    out = filtered;
  }
  return out;
}

}  // namespace

GrassmannianSpace build_space(Family f, int group_rank, int r, Component component) {
  GrassmannianSpace sp;
  sp.family = f;
  sp.group_rank = group_rank;
  sp.r = r;
  sp.component = component;
  const int m = group_rank;

  switch (f) {
    case Family::A:
      sp.ambient = m + 1;
      if (r < 1 || r > m) throw UnsupportedRank("Gr(r,n) needs 1 <= r <= n-1");
      break;
    case Family::B: sp.ambient = 2 * m + 1; break;
    case Family::C: sp.ambient = 2 * m; break;
    case Family::D: sp.ambient = 2 * m; break;
  }
  if (f != Family::A && (r < 1 || r > m))
    throw UnsupportedRank("isotropic rank r must satisfy 1 <= r <= " + std::to_string(m));
  bool d_max = f == Family::D && r == m;
  if (d_max && component == Component::Whole)
    throw UnsupportedRank("maximal isotropics in type D form two families; pick one");
  if (!d_max && component != Component::Whole)
    throw UnsupportedRank("component tag only applies to maximal isotropics in type D");

  sp.W = shared_weyl_group(f, m);
  const auto& W = *sp.W;
  const auto& rs = W.roots();

  // Removed nodes index H_2; the rest generate the parabolic.
  if (f == Family::D && r == m - 1)
    sp.removed_nodes = {m - 1, m};
  else if (d_max)
    sp.removed_nodes = {component == Component::Plus ? m : m - 1};
  else
    sp.removed_nodes = {r};
  for (int i = 1; i <= m; ++i)
    if (std::find(sp.removed_nodes.begin(), sp.removed_nodes.end(), i) ==
        sp.removed_nodes.end())
      sp.parabolic_nodes.push_back(i);

  // Minimal representatives: no right descent inside the parabolic.
  for (int w = 0; w < W.size(); ++w) {
    bool minimal = true;
    for (int node : sp.parabolic_nodes)
      if (W.right_descent(w, node)) {
        minimal = false;
        break;
      }
    if (minimal) sp.basis.push_back(w);
  }
  std::sort(sp.basis.begin(), sp.basis.end(), [&](int a, int b) {
    if (W.length(a) != W.length(b)) return W.length(a) < W.length(b);
    return W.one_line(a) < W.one_line(b);
  });

  // Index sets: apply w0*w to the labels of the base (deepest) fixed point.
  std::vector<int> base_labels;
  for (int i = 1; i <= r; ++i) base_labels.push_back(i);
  if (d_max && component == Component::Minus) base_labels.back() = -m;

  for (size_t p = 0; p < sp.basis.size(); ++p) {
    int w = W.compose(W.longest(), sp.basis[p]);
    std::vector<int> I;
    for (int l : base_labels) I.push_back(label_position(f, sp.ambient, W.apply_letter(w, l)));
    std::sort(I.begin(), I.end());
    sp.index_sets.push_back(I);
    sp.codims.push_back(W.length(sp.basis[p]));
    if (sp.index_lookup.count(I)) throw std::runtime_error("duplicate index set");
    sp.index_lookup[I] = int(p);
  }

  // Cross-check the enumeration against the combinatorial description.
  auto expect = admissible_sets(f, m, r, sp.ambient, component);
  if (expect.size() != sp.basis.size())
    throw std::runtime_error("representative count does not match admissible index sets");
  for (auto& I : expect) {
    std::sort(I.begin(), I.end());
    if (!sp.index_lookup.count(I))
      throw std::runtime_error("admissible index set missing from enumeration");
  }

  sp.dim = 0;
  for (int c : sp.codims) sp.dim = std::max<long long>(sp.dim, c);

  long long closed_dim = 0;
  switch (f) {
    case Family::A: closed_dim = (long long)r * (sp.ambient - r); break;
    case Family::B: closed_dim = (long long)r * (2 * m + 1 - r) - (long long)r * (r + 1) / 2; break;
    case Family::C: closed_dim = (long long)r * (2 * m - r) - (long long)r * (r - 1) / 2; break;
    case Family::D: closed_dim = (long long)r * (2 * m - r) - (long long)r * (r + 1) / 2; break;
  }
  if (sp.dim != closed_dim) throw std::runtime_error("dimension closed form mismatch");

  // det S^* weight at the base point and the anticanonical class, paired with
  // the removed-node coroots.  kappa converts node degrees to subsheaf degree.
  IntVec det_weight(rs.letters, 0);
  for (int l : base_labels) det_weight[std::abs(l) - 1] += l > 0 ? 1 : -1;

  IntVec anticanonical(rs.letters, 0);
  for (size_t k = 0; k < rs.positive_roots.size(); ++k) {
    bool in_parabolic = true;
    for (int node : sp.removed_nodes)
      if (rs.pos_in_simple[k][node - 1] != 0) in_parabolic = false;
    if (!in_parabolic)
      for (int i = 0; i < rs.letters; ++i) anticanonical[i] += rs.positive_roots[k][i];
  }

  int per_unit = 0;
  for (int node : sp.removed_nodes) {
    int kap = dot(det_weight, rs.simple_coroots[node - 1]);
    int c1n = dot(anticanonical, rs.simple_coroots[node - 1]);
    if (kap <= 0 || c1n <= 0 || c1n % kap != 0)
      throw std::runtime_error("degenerate degree normalization");
    sp.kappa.push_back(kap);
    sp.c1_node.push_back(c1n);
    if (per_unit == 0)
      per_unit = c1n / kap;
    else if (per_unit != c1n / kap)
      throw std::runtime_error("subsheaf-degree grading is not uniform");
  }
  sp.c1 = per_unit;

  int closed_c1 = 0;
  switch (f) {
    case Family::A: closed_c1 = sp.ambient; break;
    case Family::B: closed_c1 = r == m ? m : 2 * m - r; break;
    case Family::C: closed_c1 = 2 * m + 1 - r; break;
    case Family::D: closed_c1 = r == m ? m - 1 : (r == m - 1 ? m : 2 * m - r - 1); break;
  }
  if (sp.c1 != closed_c1) throw std::runtime_error("c1 closed form mismatch");

  // Poincare duality on the basis.
  sp.pd.resize(sp.basis.size());
  for (size_t p = 0; p < sp.basis.size(); ++p) {
    int dual = W.coset_min(W.compose(W.longest(), sp.basis[p]), sp.parabolic_nodes);
    int q = -1;
    for (size_t t = 0; t < sp.basis.size(); ++t)
      if (sp.basis[t] == dual) q = int(t);
    if (q < 0 || sp.codims[p] + sp.codims[q] != sp.dim)
      throw std::runtime_error("duality table construction failed");
    sp.pd[p] = q;
  }
  return sp;
}

std::vector<int> minimal_reps(const GrassmannianSpace& space) { return space.basis; }

int index_set_to_rep(const GrassmannianSpace& space, const std::vector<int>& I) {
  return space.basis[space.basis_pos_of_index_set(I)];
}

std::vector<int> rep_to_index_set(const GrassmannianSpace& space, int rep) {
  return space.index_sets[space.basis_pos_of_rep(rep)];
}

int codim(const GrassmannianSpace& space, const std::vector<int>& I) {
  return space.codims[space.basis_pos_of_index_set(I)];
}

std::vector<int> poincare_dual_index_set(const GrassmannianSpace& space,
                                         const std::vector<int>& I) {
  return space.index_sets[space.pd[space.basis_pos_of_index_set(I)]];
}

}  // namespace dsp::liealg
