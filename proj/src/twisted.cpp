#include "dsp/twisted.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace dsp::twisted {

namespace {

// Gaussian rationals: the fiber quadratic form sum c_i^2 is anisotropic over
// Q but splits over Q(i), which is where generic isotropic flags live.
struct GQ {
  Rat re, im;
  GQ() : re(0), im(0) {}
  GQ(Rat r) : re(std::move(r)), im(0) {}
  GQ(Rat r, Rat i) : re(std::move(r)), im(std::move(i)) {}
  bool is_zero() const { return re.is_zero() && im.is_zero(); }
  friend GQ operator+(const GQ& a, const GQ& b) { return {a.re + b.re, a.im + b.im}; }
  friend GQ operator-(const GQ& a, const GQ& b) { return {a.re - b.re, a.im - b.im}; }
  friend GQ operator*(const GQ& a, const GQ& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend GQ operator/(const GQ& a, const GQ& b) {
    Rat nrm = b.re * b.re + b.im * b.im;
    if (nrm.is_zero()) throw NumError("division by zero Gaussian rational");
    return {(a.re * b.re + a.im * b.im) / nrm, (a.im * b.re - a.re * b.im) / nrm};
  }
  GQ operator-() const { return {-re, -im}; }
  bool operator==(const GQ& o) const { return re == o.re && im == o.im; }
};

using Row = std::vector<GQ>;
using Mat = std::vector<Row>;

Mat zeros(int r, int c) { return Mat(r, Row(c)); }

// Reduced row echelon form in place; returns pivot columns.
std::vector<int> rref(Mat& a) {
  std::vector<int> pivots;
  int rows = int(a.size());
  int cols = rows ? int(a[0].size()) : 0;
  int rk = 0;
  for (int c = 0; c < cols && rk < rows; ++c) {
    int sel = -1;
    for (int r = rk; r < rows; ++r)
      if (!a[r][c].is_zero()) {
        sel = r;
        break;
      }
    if (sel < 0) continue;
    std::swap(a[rk], a[sel]);
    GQ inv = GQ(Rat(1)) / a[rk][c];
    for (int j = c; j < cols; ++j) a[rk][j] = a[rk][j] * inv;
    for (int r = 0; r < rows; ++r) {
      if (r == rk || a[r][c].is_zero()) continue;
      GQ f = a[r][c];
      for (int j = c; j < cols; ++j) a[r][j] = a[r][j] - f * a[rk][j];
    }
    pivots.push_back(c);
    ++rk;
  }
  return pivots;
}

// Basis of the right kernel, columns of the returned matrix.
Mat kernel_basis(Mat a) {
  int cols = a.empty() ? 0 : int(a[0].size());
  auto pivots = rref(a);
  std::vector<bool> is_pivot(cols, false);
  for (int c : pivots) is_pivot[c] = true;
  Mat K = zeros(cols, 0);
  for (int free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    Row v(cols);
    v[free] = GQ(Rat(1));
    for (size_t p = 0; p < pivots.size(); ++p) v[pivots[p]] = -a[p][free];
    for (int j = 0; j < cols; ++j) K[j].push_back(v[j]);
  }
  return K;
}

int rank_of(Mat a) { return int(rref(a).size()); }

Mat matmul(const Mat& a, const Mat& b) {
  int r = int(a.size()), k = a.empty() ? 0 : int(a[0].size());
  int c = b.empty() ? 0 : int(b[0].size());
  Mat out = zeros(r, c);
  for (int i = 0; i < r; ++i)
    for (int t = 0; t < k; ++t) {
      if (a[i][t].is_zero()) continue;
      for (int j = 0; j < c; ++j) out[i][j] = out[i][j] + a[i][t] * b[t][j];
    }
  return out;
}

Mat transpose(const Mat& a) {
  int r = int(a.size()), c = a.empty() ? 0 : int(a[0].size());
  Mat out = zeros(c, r);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < c; ++j) out[j][i] = a[i][j];
  return out;
}

Rat small_rat(SplitMix64& rng) {
  long long num = (long long)rng.below(19) - 9;
  long long den = 1 + (long long)rng.below(3);
  return Rat(num, den);
}

// The fiber form on coordinates (A, B, C_1..C_{n-2}) is 2AB + sum C^2; its
// Gram matrix for the associated bilinear form B(u,v) with q(v) = B(v,v).
Mat gram(int n) {
  Mat Q = zeros(n, n);
  Q[0][1] = GQ(Rat(1));
  Q[1][0] = GQ(Rat(1));
  for (int j = 2; j < n; ++j) Q[j][j] = GQ(Rat(1));
  return Q;
}

// Generic complete isotropic flag: columns of the result, first i columns
// spanning G^i.  Built from a split basis over Q(i) moved by a random
// rational Cayley isometry.
Mat generic_flag(int n, SplitMix64& rng) {
  const int m = n / 2;
  Mat B = zeros(n, n);
  int col = 0;
  // isotropics: e_A, then paired C-columns.
  B[0][col++] = GQ(Rat(1));
  for (int j = 0; j + 1 < n - 2; j += 2) {
    B[2 + j][col] = GQ(Rat(1));
    B[3 + j][col] = GQ(Rat(0), Rat(1));
    ++col;
  }
  if (n % 2 == 1) B[n - 1][col++] = GQ(Rat(1));  // anisotropic middle
  for (int j = ((n - 2) / 2) * 2 - 2; j >= 0; j -= 2) {
    B[2 + j][col] = GQ(Rat(1));
    B[3 + j][col] = GQ(Rat(0), Rat(-1));
    ++col;
  }
  B[1][col++] = GQ(Rat(1));
  if (col != n) throw std::runtime_error("flag basis assembly failed");
  (void)m;

  // Cayley: g = (I - S)(I + S)^{-1} with S = Q^{-1} K, K skew.
  Mat Q = gram(n);
  Mat K = zeros(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      Rat v = small_rat(rng);
      K[i][j] = GQ(v);
      K[j][i] = GQ(-v);
    }
  // Q^{-1} for this Gram matrix equals Q itself except swap block is its own
  // inverse; compute generally by solving.
  Mat aug = zeros(n, 2 * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) aug[i][j] = Q[i][j];
    aug[i][n + i] = GQ(Rat(1));
  }
  rref(aug);
  Mat Qinv = zeros(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) Qinv[i][j] = aug[i][n + j];
  Mat S = matmul(Qinv, K);
  Mat IpS = zeros(n, 2 * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) IpS[i][j] = S[i][j];
    IpS[i][i] = IpS[i][i] + GQ(Rat(1));
    IpS[i][n + i] = GQ(Rat(1));
  }
  auto piv = rref(IpS);
  if (int(piv.size()) != n) throw std::runtime_error("Cayley draw was singular");
  Mat inv = zeros(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) inv[i][j] = IpS[i][n + j];
  Mat ImS = zeros(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) ImS[i][j] = (i == j ? GQ(Rat(1)) : GQ()) - S[i][j];
  Mat g = matmul(ImS, inv);
  return matmul(g, B);
}

// Rows annihilating the first i columns of F.
Mat annihilator(const Mat& F, int i) {
  int n = int(F.size());
  Mat cols = zeros(i, n);  // transpose of the first i columns
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < i; ++c) cols[c][r] = F[r][c];
  Mat K = kernel_basis(cols);  // n x (n - rank)
  return transpose(K);         // rows pair to zero with G^i
}

struct Classification {
  EvalKind kind;
  BigInt count;
};

// Solutions in P(kernel) of one quadric, excluding the locus where the
// C-block vanishes. KC = C-rows composed with the kernel parametrization.
Classification classify_quadric(const Mat& KC, const Mat& S, int k) {
  Classification out{EvalKind::Empty, BigInt(0)};
  if (k == 0) return out;
  bool c_all_zero = true;
  for (const auto& row : KC)
    for (const auto& e : row)
      if (!e.is_zero()) c_all_zero = false;
  if (c_all_zero) return out;  // every member is non-saturated

  int rank = rank_of(S);
  if (rank == 0) {
    if (k - 1 == 0) {
      out.kind = EvalKind::Finite;
      out.count = BigInt(1);
    } else {
      out.kind = EvalKind::Infinite;
    }
    return out;
  }
  if (k == 1) return out;  // nonzero form on a line: empty
  if (k == 2) {
    // Binary quadratic a y0^2 + 2b y0 y1 + c y1^2.
    GQ a = S[0][0], b = S[0][1], c = S[1][1];
    GQ disc = b * b - a * c;
    int pts = disc.is_zero() ? 1 : 2;
    // Exclude C = 0 points: kernel of KC restricted to the 2-dim y-space.
    Mat kc = KC;
    Mat Z = kernel_basis(kc);
    int zdim = Z.empty() ? 0 : int(Z[0].size());
    if (zdim >= 2) return out;  // c vanishes identically (caught above, safety)
    if (zdim == 1) {
      GQ y0 = Z[0][0], y1 = Z[1][0];
      GQ val = a * y0 * y0 + GQ(Rat(2)) * b * y0 * y1 + c * y1 * y1;
      if (val.is_zero()) --pts;
    }
    if (pts <= 0) return out;
    out.kind = EvalKind::Finite;
    out.count = BigInt(pts);
    return out;
  }
  // k >= 3: a quadric hypersurface of dimension >= 1.
  if (rank >= 2) {
    out.kind = EvalKind::Infinite;
    return out;
  }
  // rank 1: double hyperplane {l = 0}; solutions unless it lies in {C = 0}.
  Row ell;
  for (int i = 0; i < k; ++i) {
    bool nz = false;
    for (int j = 0; j < k; ++j)
      if (!S[i][j].is_zero()) nz = true;
    if (nz) {
      ell = S[i];
      break;
    }
  }
  bool contained = true;
  for (const auto& crow : KC) {
    // crow proportional to ell?
    GQ ratio;
    bool have = false, prop = true;
    for (int j = 0; j < k; ++j) {
      if (ell[j].is_zero()) {
        if (!crow[j].is_zero()) prop = false;
        continue;
      }
      GQ q = crow[j] / ell[j];
      if (!have) {
        ratio = q;
        have = true;
      } else if (!(q == ratio)) {
        prop = false;
      }
    }
    if (!prop) contained = false;
  }
  if (contained) return out;
  out.kind = k - 2 == 0 ? EvalKind::Finite : EvalKind::Infinite;
  if (out.kind == EvalKind::Finite) out.count = BigInt(1);
  return out;
}

// r = 1, d = 0: v = (a(t), 0, c) with a linear and c constant; one quadric
// sum c^2 = 0 on the linear solution space, saturated iff c != 0.
Classification eval_d0(const liealg::GrassmannianSpace& fiber, const TwistedState& st,
                       SplitMix64& rng) {
  const int n = st.n;
  const int M = n;  // a0, a1, c_1..c_{n-2}
  std::vector<Rat> points = {Rat(0), Rat(1), Rat(-1), Rat(2), Rat(-2), Rat(3), Rat(-3)};
  Mat eqs = zeros(0, M);
  for (size_t w = 0; w < st.index_sets.size(); ++w) {
    int iw = st.index_sets[w][0];
    if (iw == n) continue;  // vacuous
    Mat F = generic_flag(n, rng);
    Mat N = annihilator(F, iw);
    // v(t_w) as a linear map of the unknowns.
    Mat V = zeros(n, M);
    V[0][0] = GQ(Rat(1));
    V[0][1] = GQ(points.at(w));
    for (int j = 0; j < n - 2; ++j) V[2 + j][2 + j] = GQ(Rat(1));
    Mat rows = matmul(N, V);
    for (auto& r : rows) eqs.push_back(r);
  }
  Mat K = kernel_basis(eqs.empty() ? zeros(1, M) : eqs);
  int k = K.empty() ? 0 : int(K[0].size());
  // C-block of the kernel parametrization.
  Mat KC = zeros(n - 2, k);
  for (int j = 0; j < n - 2; ++j)
    for (int c = 0; c < k; ++c) KC[j][c] = K[2 + j][c];
  Mat S = matmul(transpose(KC), KC);  // the quadric sum c^2 in y-coordinates
  (void)fiber;
  return classify_quadric(KC, S, k);
}

// n = 3, odd d = 2e+1: v = (A^2, -B^2/2, AB); every Schubert condition picks
// the flag line's conic parameter, so everything is linear in (A, B).
Classification eval_n3_odd(const TwistedState& st, SplitMix64& rng) {
  const int e = (st.d - 1) / 2;
  const int nA = e + 2, nB = e + 1;  // coefficient counts
  std::vector<Rat> points = {Rat(0), Rat(1), Rat(-1), Rat(2), Rat(-2), Rat(3), Rat(-3)};
  Mat eqs = zeros(0, nA + nB);
  for (size_t w = 0; w < st.index_sets.size(); ++w) {
    int iw = st.index_sets[w][0];
    if (iw == 3) continue;  // vacuous
    // Flag line chosen through its conic parameter (sigma : tau).
    Rat sigma = small_rat(rng), tau = small_rat(rng);
    while (sigma.is_zero() && tau.is_zero()) tau = small_rat(rng);
    Row row(nA + nB);
    Rat t = points.at(w);
    Rat tp(1);
    for (int j = 0; j < nA; ++j) {
      row[j] = GQ(tau * tp);
      tp *= t;
    }
    tp = Rat(1);
    for (int j = 0; j < nB; ++j) {
      row[nA + j] = GQ(-(sigma * tp));
      tp *= t;
    }
    eqs.push_back(row);
  }
  Mat K = kernel_basis(eqs.empty() ? zeros(1, nA + nB) : eqs);
  int k = K.empty() ? 0 : int(K[0].size());
  Classification out{EvalKind::Empty, BigInt(0)};
  if (k == 0) return out;

  // Coprimality of the homogenized pair (A~, B~) of degrees (e+1, e) via the
  // Sylvester resultant; on a positive-dimensional family, test identical
  // vanishing on a grid large enough for the resultant's degree.
  auto resultant_at = [&](const std::vector<Rat>& y) {
    // Coefficients of A (degree e+1) and B (degree e) homogenized.
    std::vector<GQ> A(nA), Bv(nB);
    for (int j = 0; j < nA; ++j) {
      GQ s;
      for (int c = 0; c < k; ++c) s = s + K[j][c] * GQ(y[c]);
      A[j] = s;
    }
    for (int j = 0; j < nB; ++j) {
      GQ s;
      for (int c = 0; c < k; ++c) s = s + K[nA + j][c] * GQ(y[c]);
      Bv[j] = s;
    }
    int da = e + 1, db = e;
    int N = da + db;
    if (N == 0) return Bv.empty() ? GQ(Rat(1)) : GQ(Rat(1));
    Mat syl = zeros(N, N);
    for (int r = 0; r < db; ++r)
      for (int j = 0; j < da + 1; ++j) syl[r][r + j] = A[da - j];
    for (int r = 0; r < da; ++r)
      for (int j = 0; j < db + 1; ++j) syl[db + r][r + j] = Bv[db - j];
    // Determinant by elimination.
    GQ det(Rat(1));
    Mat m = syl;
    for (int c = 0; c < N; ++c) {
      int sel = -1;
      for (int r = c; r < N; ++r)
        if (!m[r][c].is_zero()) {
          sel = r;
          break;
        }
      if (sel < 0) return GQ();
      if (sel != c) {
        std::swap(m[sel], m[c]);
        det = -det;
      }
      det = det * m[c][c];
      GQ inv = GQ(Rat(1)) / m[c][c];
      for (int r = c + 1; r < N; ++r) {
        GQ f = m[r][c] * inv;
        if (f.is_zero()) continue;
        for (int j = c; j < N; ++j) m[r][j] = m[r][j] - f * m[c][j];
      }
    }
    return det;
  };

  if (k == 1) {
    std::vector<Rat> y = {Rat(1)};
    if (resultant_at(y).is_zero()) return out;  // not saturated
    out.kind = EvalKind::Finite;
    out.count = BigInt(1);
    return out;
  }
  // Positive-dimensional family: resultant degree <= 2e+1 in each variable.
  int grid = 2 * e + 3;
  std::function<bool(std::vector<Rat>&, int)> all_zero = [&](std::vector<Rat>& y, int pos) {
    if (pos == k) return resultant_at(y).is_zero();
    for (int v = 0; v < grid; ++v) {
      y[pos] = Rat(v);
      if (!all_zero(y, pos + 1)) return false;
    }
    return true;
  };
  std::vector<Rat> y(k, Rat(0));
  if (all_zero(y, 0)) return out;
  out.kind = EvalKind::Infinite;
  return out;
}

class EliminationOracle : public Engine {
public:
  explicit EliminationOracle(uint64_t seed) : seed_(seed) {}
  std::string name() const override { return "elimination-oracle"; }

  std::optional<Evaluation> evaluate(const liealg::GrassmannianSpace& fiber,
                                     const TwistedState& st) override {
    if (fiber.r != 1) return std::nullopt;
    if (st.d == -1) {
      // The O(1) summand is the unique degree-+1 isotropic line sub-bundle,
      // and a fixed direction misses every nonvacuous generic condition.
      bool vacuous = true;
      for (const auto& I : st.index_sets)
        if (I[0] != st.n) vacuous = false;
      Evaluation ev;
      ev.method = name();
      if (vacuous) {
        ev.kind = EvalKind::Finite;
        ev.count = BigInt(1);
      } else {
        ev.kind = EvalKind::Empty;
      }
      return ev;
    }
    if (st.d == 0) return stabilized(fiber, st, &eval_d0);
    if (st.n == 3) {
      if (st.d % 2 == 0) {
        // No primitive (A^2, -B^2/2, AB)-shape fits the degree bounds: the
        // top coefficients vanish simultaneously, so no sub-bundles exist.
        Evaluation ev;
        ev.kind = EvalKind::Empty;
        ev.method = name();
        return ev;
      }
      auto fn = [](const liealg::GrassmannianSpace&, const TwistedState& s,
                   SplitMix64& rng) { return eval_n3_odd(s, rng); };
      return stabilized(fiber, st, fn);
    }
    return std::nullopt;
  }

private:
  template <typename Fn>
  std::optional<Evaluation> stabilized(const liealg::GrassmannianSpace& fiber,
                                       const TwistedState& st, Fn fn) {
    // Flags are random; accept only classifications stable across draws.
    std::vector<Classification> runs;
    for (int attempt = 0; attempt < 4; ++attempt) {
      SplitMix64 rng(seed_ + 7919 * attempt);
      runs.push_back(fn(fiber, st, rng));
      if (runs.size() >= 2) {
        const auto& a = runs[runs.size() - 2];
        const auto& b = runs.back();
        if (a.kind == b.kind && a.count == b.count) {
          Evaluation ev;
          ev.kind = a.kind;
          ev.count = a.count;
          ev.method = name();
          return ev;
        }
      }
    }
    Evaluation ev;  // unstable draws: refuse to guess
    ev.kind = EvalKind::Unknown;
    ev.method = name();
    return ev;
  }

  uint64_t seed_;
};

}  // namespace

long long expected_dim(const liealg::GrassmannianSpace& fiber, int d) {
  return fiber.dim + (long long)d * fiber.c1;
}

Evaluator::Evaluator(uint64_t seed) : seed_(seed) {
  engines_.push_back(std::make_shared<EliminationOracle>(seed));
}

void Evaluator::register_engine(std::shared_ptr<Engine> engine) {
  engines_.push_back(std::move(engine));
}

Evaluation Evaluator::evaluate(const liealg::GrassmannianSpace& fiber,
                               const TwistedState& state) {
  if (state.d < -1) throw std::invalid_argument("twisted states require d >= -1");
  if (state.n < 3) throw std::invalid_argument("twisted bundle needs rank >= 3");
  long long codim_sum = 0;
  for (const auto& I : state.index_sets) codim_sum += liealg::codim(fiber, I);
  if (expected_dim(fiber, state.d) - codim_sum < 0) {
    Evaluation ev;
    ev.kind = EvalKind::Empty;
    ev.method = "dimension-count";
    return ev;
  }
  std::optional<Evaluation> settled;
  for (const auto& engine : engines_) {
    auto ev = engine->evaluate(fiber, state);
    if (!ev || ev->kind == EvalKind::Unknown) continue;
    if (settled && (settled->kind != ev->kind || settled->count != ev->count)) {
      std::ostringstream os;
      os << "EngineConflict: " << settled->method << " and " << ev->method
         << " disagree on a twisted state";
      throw EngineConflict(os.str());
    }
    if (!settled) settled = ev;
  }
  if (settled) return *settled;
  Evaluation ev;
  ev.kind = EvalKind::Unknown;
  ev.method = "none";
  return ev;
}

}  // namespace dsp::twisted
