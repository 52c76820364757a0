#include "dsp/quantum.hpp"

#include <algorithm>
#include <array>
#include <cassert>
#include <functional>
#include <sstream>
#include <unordered_map>

namespace dsp::quantum {

using liealg::Family;
using liealg::GrassmannianSpace;
using liealg::WeylGroup;

namespace {

constexpr int kMaxNodes = 8;
constexpr int kDegBits = 6;
constexpr uint64_t kDegMask = (1u << kDegBits) - 1;

uint64_t pack_key(int w, const std::array<int, kMaxNodes>& deg) {
  uint64_t k = uint64_t(w) << 48;
  for (int i = 0; i < kMaxNodes; ++i) k |= (uint64_t(deg[i]) & kDegMask) << (kDegBits * i);
  return k;
}

int key_element(uint64_t k) { return int(k >> 48); }

std::array<int, kMaxNodes> key_degree(uint64_t k) {
  std::array<int, kMaxNodes> d{};
  for (int i = 0; i < kMaxNodes; ++i) d[i] = int((k >> (kDegBits * i)) & kDegMask);
  return d;
}

}  // namespace

void QHElement::add(int pos, int d, const BigInt& c) {
  if (c.is_zero()) return;
  auto key = std::make_pair(pos, d);
  auto it = terms.find(key);
  if (it == terms.end()) {
    terms.emplace(key, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) terms.erase(it);
  }
}

// ---------------------------------------------------------------------------
// QH*(G/B) engine over the quantum Bruhat graph.

class GBEngine {
public:
  using Elem = std::unordered_map<uint64_t, Rat>;

  GBEngine(Family f, int rank) : wg_(liealg::shared_weyl_group(f, rank)) {
    const auto& W = *wg_;
    const auto& rs = W.roots();
    edges_.resize(W.size());
    for (int w = 0; w < W.size(); ++w) {
      for (size_t a = 0; a < rs.positive_roots.size(); ++a) {
        int t = W.compose_right_refl(w, int(a));
        int dl = W.length(t) - W.length(w);
        bool classical = dl == 1;
        bool quantum = dl == 1 - rs.two_rho_pairing[a];
        if (!classical && !quantum) continue;
        Edge e;
        e.target = t;
        e.quantum = quantum;
        e.coords.fill(0);
        for (int i = 0; i < rank; ++i) e.coords[i] = rs.pos_coroot_in_simple[a][i];
        edges_[w].push_back(e);
      }
    }
    int max_len = W.length(W.longest());
    by_level_.resize(max_len + 1);
    for (int w = 0; w < W.size(); ++w) by_level_[W.length(w)].push_back(w);
    recipes_.resize(max_len + 1);
  }

  const WeylGroup& W() const { return *wg_; }

  // Column of products sigma_u *_B sigma_v for all l(u) <= max_level.
  std::vector<Elem> column(int v, int max_level) {
    std::vector<Elem> X(wg_->size());
    std::array<int, kMaxNodes> zero{};
    X[wg_->identity()][pack_key(v, zero)] = Rat(1);
    for (int l = 1; l <= max_level; ++l) {
      ensure_recipe(l);
      const Recipe& rec = recipes_[l];
      std::vector<Elem> B(rec.rows.size());
      for (size_t k = 0; k < rec.rows.size(); ++k) {
        auto [u, node] = rec.rows[k];
        B[k] = chevalley_apply(node, X[u]);
        for (const Edge& e : edges_[u]) {
          if (!e.quantum || e.coords[node - 1] == 0) continue;
          axpy_shift(B[k], X[e.target], Rat(-e.coords[node - 1]), e.coords);
        }
      }
      for (size_t j = 0; j < rec.unknowns.size(); ++j) {
        Elem acc;
        for (size_t k = 0; k < rec.rows.size(); ++k) {
          const Rat& c = rec.inv[j][k];
          if (c.is_zero()) continue;
          for (const auto& [key, val] : B[k]) {
            Rat& slot = acc[key];
            slot += c * val;
          }
        }
        Elem pruned;
        for (auto& [key, val] : acc)
          if (!val.is_zero()) pruned.emplace(key, std::move(val));
        X[rec.unknowns[j]] = std::move(pruned);
      }
    }
    return X;
  }

private:
  struct Edge {
    int target;
    bool quantum;
    std::array<int8_t, kMaxNodes> coords;
  };

  struct Recipe {
    bool built = false;
    std::vector<int> unknowns;
    std::vector<std::pair<int, int>> rows;  // (element at level l-1, node)
    std::vector<std::vector<Rat>> inv;      // unknowns x rows
  };

  Elem chevalley_apply(int node, const Elem& X) const {
    Elem out;
    for (const auto& [key, c] : X) {
      int x = key_element(key);
      for (const Edge& e : edges_[x]) {
        int mult = e.coords[node - 1];
        if (mult == 0) continue;
        uint64_t nk = key;
        nk = (uint64_t(e.target) << 48) | (key & ((1ULL << 48) - 1));
        if (e.quantum) {
          auto d = key_degree(key);
          for (int i = 0; i < kMaxNodes; ++i) d[i] += e.coords[i];
          nk = pack_key(e.target, d);
        }
        Rat& slot = out[nk];
        slot += c * Rat(mult);
      }
    }
    return out;
  }

  // dst += c * q^shift * src
  static void axpy_shift(Elem& dst, const Elem& src, const Rat& c,
                         const std::array<int8_t, kMaxNodes>& shift) {
    for (const auto& [key, val] : src) {
      auto d = key_degree(key);
      for (int i = 0; i < kMaxNodes; ++i) d[i] += shift[i];
      Rat& slot = dst[pack_key(key_element(key), d)];
      slot += c * val;
    }
  }

  void ensure_recipe(int l) {
    Recipe& rec = recipes_[l];
    if (rec.built) return;
    rec.unknowns = by_level_[l];
    const int C = int(rec.unknowns.size());
    std::unordered_map<int, int> col;
    for (int j = 0; j < C; ++j) col[rec.unknowns[j]] = j;

    // Candidate rows: classical Chevalley expansions from level l-1.
    std::vector<std::pair<int, int>> all_rows;
    std::vector<std::vector<Rat>> mat;  // row-major over C columns
    for (int u : by_level_[l - 1]) {
      for (int node = 1; node <= wg_->roots().rank; ++node) {
        std::vector<Rat> row(C, Rat(0));
        bool nonzero = false;
        for (const Edge& e : edges_[u]) {
          if (e.quantum) continue;
          int mult = e.coords[node - 1];
          if (mult == 0) continue;
          row[col.at(e.target)] += Rat(mult);
          nonzero = true;
        }
        if (!nonzero) continue;
        all_rows.emplace_back(u, node);
        mat.push_back(std::move(row));
      }
    }

    // Greedy full-rank row selection by exact elimination.
    std::vector<std::vector<Rat>> reduced;   // echelon rows
    std::vector<int> pivot_cols;
    std::vector<int> selected;
    for (size_t ridx = 0; ridx < mat.size() && int(selected.size()) < C; ++ridx) {
      std::vector<Rat> row = mat[ridx];
      for (size_t p = 0; p < reduced.size(); ++p) {
        const Rat& f = row[pivot_cols[p]];
        if (f.is_zero()) continue;
        Rat factor = f;
        for (int j = 0; j < C; ++j) row[j] -= factor * reduced[p][j];
      }
      int pc = -1;
      for (int j = 0; j < C; ++j)
        if (!row[j].is_zero()) {
          pc = j;
          break;
        }
      if (pc < 0) continue;
      Rat inv = Rat(1) / row[pc];
      for (int j = 0; j < C; ++j) row[j] = row[j] * inv;
      reduced.push_back(std::move(row));
      pivot_cols.push_back(pc);
      selected.push_back(int(ridx));
    }
    if (int(selected.size()) != C)
      throw std::runtime_error(
          "RecursionIncomplete: divisor products do not span level " + std::to_string(l));

    // Invert the selected C x C block exactly.
    std::vector<std::vector<Rat>> a(C, std::vector<Rat>(2 * C, Rat(0)));
    for (int k = 0; k < C; ++k) {
      for (int j = 0; j < C; ++j) a[k][j] = mat[selected[k]][j];
      a[k][C + k] = Rat(1);
    }
    for (int colj = 0; colj < C; ++colj) {
      int piv = -1;
      for (int k = colj; k < C; ++k)
        if (!a[k][colj].is_zero()) {
          piv = k;
          break;
        }
      if (piv < 0) throw std::runtime_error("RecursionIncomplete: singular level system");
      std::swap(a[colj], a[piv]);
      Rat inv = Rat(1) / a[colj][colj];
      for (int j = 0; j < 2 * C; ++j) a[colj][j] = a[colj][j] * inv;
      for (int k = 0; k < C; ++k) {
        if (k == colj || a[k][colj].is_zero()) continue;
        Rat f = a[k][colj];
        for (int j = 0; j < 2 * C; ++j) a[k][j] -= f * a[colj][j];
      }
    }
    // X = M_S^{-1} B_S; transpose into per-unknown rows over selected rows.
    rec.inv.assign(C, std::vector<Rat>(C, Rat(0)));
    for (int j = 0; j < C; ++j)
      for (int k = 0; k < C; ++k) rec.inv[j][k] = a[j][C + k];
    for (int k = 0; k < C; ++k) rec.rows.push_back(all_rows[selected[k]]);
    rec.built = true;
  }

  std::shared_ptr<WeylGroup> wg_;
  std::vector<std::vector<Edge>> edges_;
  std::vector<std::vector<int>> by_level_;
  std::vector<Recipe> recipes_;
};

namespace {

std::shared_ptr<GBEngine> shared_engine(Family f, int rank) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, std::shared_ptr<GBEngine>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(int(f), rank);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  auto e = std::make_shared<GBEngine>(f, rank);
  cache[key] = e;
  return e;
}

}  // namespace

// ---------------------------------------------------------------------------
// Ring: Peterson comparison on top of the G/B engine.

namespace {

struct LiftData {
  std::array<int, kMaxNodes> dB{};  // node coefficients of the lift
  int twist = 0;                    // wP' * wP as a group element
};

// Computes the unique lift d_B of d_P with <alpha, d_B> in {-1, 0} for all
// alpha in R_P^+, plus the Peterson twist element.
LiftData compute_lift(const GrassmannianSpace& sp, const std::vector<int>& dP) {
  const auto& W = *sp.W;
  const auto& rs = W.roots();
  const auto& PN = sp.parabolic_nodes;
  const auto& RN = sp.removed_nodes;

  // Positive roots of the Levi.
  std::vector<int> levi_roots;
  for (size_t a = 0; a < rs.positive_roots.size(); ++a) {
    bool in_levi = true;
    for (int node : RN)
      if (rs.pos_in_simple[a][node - 1] != 0) in_levi = false;
    if (in_levi) levi_roots.push_back(int(a));
  }

  auto coords_of = [&](const std::array<int, kMaxNodes>& node_coeffs) {
    liealg::IntVec v(rs.letters, 0);
    for (int i = 0; i < rs.rank; ++i)
      for (int t = 0; t < rs.letters; ++t) v[t] += node_coeffs[i] * rs.simple_coroots[i][t];
    return v;
  };
  auto dot = [](const liealg::IntVec& a, const liealg::IntVec& b) {
    int s = 0;
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
  };

  std::array<int, kMaxNodes> base{};
  for (size_t i = 0; i < RN.size(); ++i) base[RN[i] - 1] = dP[i];

  for (int box = 1; box <= 32; box *= 2) {
    std::vector<std::array<int, kMaxNodes>> found;
    std::vector<int> x(PN.size(), -box);
    while (true) {
      std::array<int, kMaxNodes> cand = base;
      for (size_t j = 0; j < PN.size(); ++j) cand[PN[j] - 1] = x[j];
      auto v = coords_of(cand);
      bool ok = true;
      for (int a : levi_roots) {
        int p = dot(rs.positive_roots[a], v);
        if (p != 0 && p != -1) {
          ok = false;
          break;
        }
      }
      if (ok) found.push_back(cand);
      size_t j = 0;
      for (; j < x.size(); ++j) {
        if (x[j] < box) {
          ++x[j];
          break;
        }
        x[j] = -box;
      }
      if (j == x.size()) break;
      if (x.empty()) break;
    }
    if (PN.empty()) {
      // Borel case: the lift is d_P itself.
      LiftData ld;
      ld.dB = base;
      ld.twist = W.identity();
      return ld;
    }
    if (!found.empty()) {
      if (found.size() > 1) throw std::runtime_error("Peterson lift is not unique");
      LiftData ld;
      ld.dB = found[0];
      for (int i = 0; i < rs.rank; ++i)
        if (ld.dB[i] < 0) throw std::runtime_error("Peterson lift is not effective");
      // P' = parabolic nodes pairing to zero with the lift.
      auto v = coords_of(ld.dB);
      std::vector<int> pprime;
      for (int node : PN)
        if (dot(rs.simple_roots[node - 1], v) == 0) pprime.push_back(node);
      int wP = W.longest_parabolic(PN);
      int wPp = W.longest_parabolic(pprime);
      ld.twist = W.compose(wPp, wP);
      return ld;
    }
  }
  throw std::runtime_error("Peterson lift search exhausted its box");
}

}  // namespace

Ring::Ring(GrassmannianSpace space)
    : space_(std::move(space)), engine_(shared_engine(space_.family, space_.group_rank)) {}

QHElement Ring::basis_element(const std::vector<int>& I) const {
  QHElement e;
  e.add(space_.basis_pos_of_index_set(I), 0, BigInt(1));
  return e;
}

std::vector<int> Ring::poincare_dual(const std::vector<int>& I) const {
  return space_.index_sets[space_.pd[space_.basis_pos_of_index_set(I)]];
}

void Ring::ensure_column(int v_pos) {
  if (columns_done_.count(v_pos)) return;

  const auto& W = *space_.W;
  int v = space_.basis[v_pos];
  auto X = engine_->column(v, int(space_.dim));

  // Lift cache per parabolic degree vector.
  std::map<std::vector<int>, LiftData> lifts;

  std::map<std::pair<int, int>, QHElement> col;
  for (int u_pos = 0; u_pos < space_.num_classes(); ++u_pos) {
    QHElement prod;
    int u = space_.basis[u_pos];
    for (const auto& [key, coeff] : X[u]) {
      if (coeff.is_zero()) continue;
      int x = key_element(key);
      auto dB = key_degree(key);
      std::vector<int> dP;
      for (int node : space_.removed_nodes) dP.push_back(dB[node - 1]);
      auto it = lifts.find(dP);
      if (it == lifts.end()) it = lifts.emplace(dP, compute_lift(space_, dP)).first;
      if (it->second.dB != dB) continue;  // not a Peterson-paired coefficient
      int w = W.compose(x, it->second.twist);
      bool minimal = true;
      for (int node : space_.parabolic_nodes)
        if (W.right_descent(w, node)) {
          minimal = false;
          break;
        }
      if (!minimal) continue;
      int w_pos = space_.basis_pos_of_rep(w);
      int subsheaf = 0, c1_pairing = 0;
      for (size_t i = 0; i < space_.removed_nodes.size(); ++i) {
        subsheaf += dP[i] * space_.kappa[i];
        c1_pairing += dP[i] * space_.c1_node[i];
      }
      if (space_.codims[u_pos] + space_.codims[v_pos] != space_.codims[w_pos] + c1_pairing)
        throw std::runtime_error("quantum product violates the grading");
      if (!coeff.is_integer() || coeff.sign() < 0)
        throw std::runtime_error("non-positive or fractional structure constant");
      prod.add(w_pos, subsheaf, coeff.num());
    }
    col[{u_pos, v_pos}] = prod;
    col[{v_pos, u_pos}] = std::move(prod);
  }
  for (auto& [k, e] : col) table_[k] = std::move(e);
  columns_done_.insert(v_pos);
}

const QHElement& Ring::product_pos(int u_pos, int v_pos) {
  std::lock_guard<std::mutex> lock(mu_);
  auto it = table_.find({u_pos, v_pos});
  if (it != table_.end()) return it->second;
  ensure_column(v_pos);
  return table_.at({u_pos, v_pos});
}

QHElement Ring::product(const std::vector<int>& u, const std::vector<int>& v) {
  return product_pos(space_.basis_pos_of_index_set(u), space_.basis_pos_of_index_set(v));
}

QHElement Ring::product(const QHElement& a, const QHElement& b) {
  QHElement out;
  for (const auto& [ka, ca] : a.terms)
    for (const auto& [kb, cb] : b.terms) {
      const QHElement& p = product_pos(ka.first, kb.first);
      BigInt c = ca * cb;
      for (const auto& [kp, cp] : p.terms)
        out.add(kp.first, kp.second + ka.second + kb.second, c * cp);
    }
  return out;
}

QHElement Ring::chevalley_product(const QHElement& elem) {
  QHElement h;
  for (int pos : space_.divisor_positions()) h.add(pos, 0, BigInt(1));
  return product(h, elem);
}

BigInt Ring::gw_number_pos(const std::vector<int>& positions, int d) {
  if (positions.empty()) throw std::invalid_argument("need k >= 1 classes");
  if (d < 0) return BigInt(0);
  long long codim_sum = 0;
  for (int p : positions) codim_sum += space_.codims[p];
  if (codim_sum != space_.dim + (long long)d * space_.c1) return BigInt(0);

  std::vector<int> key = positions;
  std::sort(key.begin(), key.end());
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = gw_memo_.find({key, d});
    if (it != gw_memo_.end()) return it->second;
  }

  QHElement acc;
  acc.add(0, 0, BigInt(1));  // empty product = fundamental class
  for (size_t j = 0; j + 1 < positions.size(); ++j) {
    QHElement next;
    for (const auto& [k, c] : acc.terms) {
      if (k.second > d) continue;
      const QHElement& p = product_pos(k.first, positions[j]);
      for (const auto& [kp, cp] : p.terms)
        if (k.second + kp.second <= d) next.add(kp.first, k.second + kp.second, c * cp);
    }
    acc = std::move(next);
  }
  auto it = acc.terms.find({space_.pd[positions.back()], d});
  BigInt res = it == acc.terms.end() ? BigInt(0) : it->second;
  {
    std::lock_guard<std::mutex> lock(mu_);
    gw_memo_[{key, d}] = res;
  }
  return res;
}

BigInt Ring::gw_number(const GWQuery& query) {
  std::vector<int> positions;
  for (const auto& I : query.classes) positions.push_back(space_.basis_pos_of_index_set(I));
  return gw_number_pos(positions, query.d);
}

StateStatus Ring::state_status_pos(std::vector<int> positions, int d) {
  std::sort(positions.begin(), positions.end());
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = status_memo_.find({positions, d});
    if (it != status_memo_.end()) return it->second;
  }
  StateStatus st;
  long long target = space_.dim + (long long)d * space_.c1;
  long long codim_sum = 0;
  for (int p : positions) codim_sum += space_.codims[p];
  st.excess = int(target - codim_sum);

  if (st.excess < 0) {
    st.kind = StateKind::Empty;
  } else if (st.excess == 0) {
    st.count = gw_number_pos(positions, d);
    st.kind = st.count.is_zero() ? StateKind::Empty : StateKind::Finite;
  } else {
    // Refinement search: deepen conditions (Bruhat up-sets, i.e. termwise
    // smaller index sets) to exact codimension, looking for a nonzero count.
    const int k = int(positions.size());
    std::vector<std::vector<int>> ups(k);
    for (int i = 0; i < k; ++i) {
      for (int q = 0; q < space_.num_classes(); ++q)
        if (space_.W->bruhat_leq(space_.basis[positions[i]], space_.basis[q]))
          ups[i].push_back(q);
    }
    std::vector<int> suffix_min(k + 1, 0), suffix_max(k + 1, 0);
    for (int i = k - 1; i >= 0; --i) {
      suffix_min[i] = suffix_min[i + 1] + space_.codims[positions[i]];
      suffix_max[i] = suffix_max[i + 1] + int(space_.dim);
    }
    std::vector<int> chosen(k);
    bool infinite = false;
    std::function<void(int, long long)> dfs = [&](int i, long long sum) {
      if (infinite) return;
      if (i == k) {
        if (sum == target && !gw_number_pos(chosen, d).is_zero()) {
          infinite = true;
          st.witness_refinement.clear();
          for (int q : chosen) st.witness_refinement.push_back(space_.index_sets[q]);
        }
        return;
      }
      for (int q : ups[i]) {
        long long s = sum + space_.codims[q];
        if (s + suffix_min[i + 1] > target) continue;
        if (s + suffix_max[i + 1] < target) continue;
        chosen[i] = q;
        dfs(i + 1, s);
        if (infinite) return;
      }
    };
    dfs(0, 0);
    st.kind = infinite ? StateKind::Infinite : StateKind::Empty;
  }
  std::lock_guard<std::mutex> lock(mu_);
  status_memo_[{positions, d}] = st;
  return st;
}

StateStatus Ring::state_status(const std::vector<std::vector<int>>& classes, int d) {
  std::vector<int> positions;
  for (const auto& I : classes) positions.push_back(space_.basis_pos_of_index_set(I));
  return state_status_pos(std::move(positions), d);
}

std::shared_ptr<Ring> shared_ring(Family f, int group_rank, int r, liealg::Component c) {
  static std::mutex mu;
  static std::map<std::tuple<int, int, int, int>, std::shared_ptr<Ring>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_tuple(int(f), group_rank, r, int(c));
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  auto ring = std::make_shared<Ring>(liealg::build_space(f, group_rank, r, c));
  cache[key] = ring;
  return ring;
}

}  // namespace dsp::quantum
