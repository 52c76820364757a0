#include "dsp/witness.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <thread>

namespace dsp::witness {

using parahoric::Group;
using CMat = Eigen::MatrixXcd;
using RMat = Eigen::MatrixXd;
using std::complex;

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

CMat to_eigen(const Matrix& m) {
  CMat out(m.n, m.n);
  for (int i = 0; i < m.n; ++i)
    for (int j = 0; j < m.n; ++j) out(i, j) = m.at(i, j);
  return out;
}

Matrix from_eigen(const CMat& m) {
  Matrix out;
  out.n = int(m.rows());
  out.a.resize(size_t(out.n) * out.n);
  for (int i = 0; i < out.n; ++i)
    for (int j = 0; j < out.n; ++j) out.at(i, j) = m(i, j);
  return out;
}

// Eigenphases sorted ascending in (-pi, pi].
std::vector<double> sorted_phases(const CMat& u) {
  Eigen::ComplexEigenSolver<CMat> es(u);
  std::vector<double> ph(u.rows());
  for (int i = 0; i < u.rows(); ++i) ph[i] = std::arg(es.eigenvalues()(i));
  std::sort(ph.begin(), ph.end());
  return ph;
}

double phase_distance(double a, double b) {
  double d = std::fmod(std::fabs(a - b), kTwoPi);
  return std::min(d, kTwoPi - d);
}

// Spectrum deviation between a unitary and target phases (turns).
double class_deviation(const CMat& u, const std::vector<double>& target_turns) {
  auto ph = sorted_phases(u);
  std::vector<double> t;
  for (double v : target_turns) {
    double x = std::fmod(v, 1.0);
    if (x > 0.5) x -= 1.0;
    if (x <= -0.5) x += 1.0;
    t.push_back(kTwoPi * x);
  }
  std::sort(t.begin(), t.end());
  double dev = 0;
  for (size_t i = 0; i < ph.size(); ++i) dev = std::max(dev, phase_distance(ph[i], t[i]));
  return dev;
}

CMat nearest_unitary(const CMat& x) {
  Eigen::JacobiSVD<CMat> svd(x, Eigen::ComputeFullU | Eigen::ComputeFullV);
  return svd.matrixU() * svd.matrixV().adjoint();
}

// Project onto the U(n) conjugacy orbit with the given phases (turns), by
// keeping the eigenvectors and replacing phases in the circularly-optimal
// sorted matching.
CMat project_unitary_orbit(const CMat& x, const std::vector<double>& target_turns) {
  CMat u = nearest_unitary(x);
  Eigen::ComplexEigenSolver<CMat> es(u);
  const int n = int(u.rows());
  Eigen::VectorXcd ev = es.eigenvalues();
  CMat v = es.eigenvectors();
  std::vector<int> idx(n);
  for (int i = 0; i < n; ++i) idx[i] = i;
  std::vector<double> ph(n);
  for (int i = 0; i < n; ++i) ph[i] = std::arg(ev(i));
  std::sort(idx.begin(), idx.end(), [&](int a, int b) { return ph[a] < ph[b]; });
  std::vector<double> t;
  for (double turn : target_turns) {
    double x2 = std::fmod(turn, 1.0);
    if (x2 > 0.5) x2 -= 1.0;
    if (x2 <= -0.5) x2 += 1.0;
    t.push_back(kTwoPi * x2);
  }
  std::sort(t.begin(), t.end());
  double best = 1e300;
  int bestrot = 0;
  for (int rot = 0; rot < n; ++rot) {
    double cost = 0;
    for (int k = 0; k < n; ++k) cost += std::pow(phase_distance(ph[idx[(k + rot) % n]], t[k]), 2);
    if (cost < best) {
      best = cost;
      bestrot = rot;
    }
  }
  Eigen::VectorXcd newev(n);
  for (int k = 0; k < n; ++k) newev(idx[(k + bestrot) % n]) = std::polar(1.0, t[k]);
  // Eigenvectors of a unitary can be assumed orthonormal; re-orthonormalize to
  // be safe against clustered eigenvalues.
  Eigen::HouseholderQR<CMat> qr(v);
  CMat q = qr.householderQ();
  return q * newev.asDiagonal() * q.adjoint();
}

// Real orthogonal orbit projection via the real Schur form.
CMat project_orthogonal_orbit(const CMat& x, const std::vector<double>& target_turns) {
  const int n = int(x.rows());
  RMat xr = x.real();
  Eigen::JacobiSVD<RMat> svd(xr, Eigen::ComputeFullU | Eigen::ComputeFullV);
  RMat q = svd.matrixU() * svd.matrixV().transpose();
  if (q.determinant() < 0) {
    RMat u = svd.matrixU();
    u.col(n - 1) *= -1;
    q = u * svd.matrixV().transpose();
  }
  Eigen::RealSchur<RMat> schur(q);
  RMat r = schur.matrixT(), t = schur.matrixU();
  struct Block {
    double angle;
    int start;
  };
  std::vector<Block> blocks;
  std::vector<int> fixed;
  for (int i = 0; i < n;) {
    if (i + 1 < n && std::fabs(r(i + 1, i)) > 1e-12) {
      blocks.push_back({std::atan2(r(i + 1, i), r(i, i)), i});
      i += 2;
    } else {
      fixed.push_back(i);
      ++i;
    }
  }
  std::sort(blocks.begin(), blocks.end(),
            [](const Block& a, const Block& b) { return std::fabs(a.angle) > std::fabs(b.angle); });
  // positive targets, descending
  std::vector<double> tgt;
  for (double turn : target_turns)
    if (turn > 1e-15) tgt.push_back(kTwoPi * turn);
  std::sort(tgt.rbegin(), tgt.rend());
  RMat rn = RMat::Identity(n, n);
  size_t bi = 0;
  for (; bi < blocks.size() && bi < tgt.size(); ++bi) {
    int p = blocks[bi].start;
    double th = blocks[bi].angle >= 0 ? tgt[bi] : -tgt[bi];
    rn(p, p) = std::cos(th);
    rn(p, p + 1) = -std::sin(th);
    rn(p + 1, p) = std::sin(th);
    rn(p + 1, p + 1) = std::cos(th);
  }
  for (size_t k = 0; bi < tgt.size() && k + 1 < fixed.size(); ++bi, k += 2) {
    int p = fixed[k], pq = fixed[k + 1];
    double th = tgt[bi];
    rn(p, p) = std::cos(th);
    rn(p, pq) = -std::sin(th);
    rn(pq, p) = std::sin(th);
    rn(pq, pq) = std::cos(th);
  }
  RMat res = t * rn * t.transpose();
  return res.cast<complex<double>>();
}

CMat symplectic_j(int n2) {
  CMat j = CMat::Zero(n2, n2);
  int n = n2 / 2;
  for (int i = 0; i < n; ++i) {
    j(i, n + i) = 1;
    j(n + i, i) = -1;
  }
  return j;
}

// Compact symplectic orbit projection: pair the +-phases through the
// quaternionic structure v -> J conj(v).
CMat project_symplectic_orbit(const CMat& x, const std::vector<double>& target_turns) {
  const int n2 = int(x.rows());
  CMat u = nearest_unitary(x);
  CMat j = symplectic_j(n2);
  Eigen::ComplexEigenSolver<CMat> es(u);
  Eigen::VectorXcd ev = es.eigenvalues();
  CMat v = es.eigenvectors();
  const int n = n2 / 2;
  std::vector<int> order(n2);
  for (int i = 0; i < n2; ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return std::arg(ev(a)) > std::arg(ev(b)); });
  // positive-side targets, descending (turns in [0,1/2])
  std::vector<double> tgt;
  for (double turn : target_turns)
    if (turn > 0) tgt.push_back(kTwoPi * turn);
  std::sort(tgt.rbegin(), tgt.rend());
  while (int(tgt.size()) < n) tgt.push_back(0.0);
  CMat out = CMat::Zero(n2, n2);
  std::vector<Eigen::VectorXcd> used;
  auto orthogonalize = [&](Eigen::VectorXcd w) {
    for (const auto& uvec : used) w -= uvec.dot(w) * uvec;
    double nrm = w.norm();
    if (nrm < 1e-12) return Eigen::VectorXcd(Eigen::VectorXcd::Zero(n2));
    return Eigen::VectorXcd(w / nrm);
  };
  int placed = 0;
  for (int k = 0; k < n2 && placed < n; ++k) {
    Eigen::VectorXcd w = orthogonalize(v.col(order[k]));
    if (w.size() == 0 || w.norm() < 0.5) continue;
    Eigen::VectorXcd wj = orthogonalize(j * w.conjugate());
    if (wj.size() == 0 || wj.norm() < 0.5) continue;
    used.push_back(w);
    used.push_back(wj);
    complex<double> lp = std::polar(1.0, tgt[placed]);
    complex<double> lm = std::polar(1.0, -tgt[placed]);
    out += lp * w * w.adjoint() + lm * wj * wj.adjoint();
    ++placed;
  }
  if (placed < n) return u;  // degenerate draw; let the verifier reject
  return out;
}

struct GroupOps {
  Group group;
  int n = 0;
  std::vector<std::vector<double>> targets;  // per point, turns

  CMat project(int w, const CMat& x) const {
    switch (group) {
      case Group::SU: return project_unitary_orbit(x, targets[w]);
      case Group::Sp: return project_symplectic_orbit(x, targets[w]);
      case Group::SO:
      case Group::Spin: return project_orthogonal_orbit(x, targets[w]);
    }
    return x;
  }

  double structure_error(const CMat& c) const {
    switch (group) {
      case Group::SU: {
        double uerr = (c.adjoint() * c - CMat::Identity(n, n)).norm();
        double derr = std::abs(c.determinant() - complex<double>(1, 0));
        return std::max(uerr, derr);
      }
      case Group::Sp: {
        CMat j = symplectic_j(n);
        double uerr = (c.adjoint() * c - CMat::Identity(n, n)).norm();
        double serr = (c.transpose() * j * c - j).norm();
        return std::max(uerr, serr);
      }
      case Group::SO:
      case Group::Spin: {
        double ierr = c.imag().norm();
        RMat cr = c.real();
        double oerr = (cr.transpose() * cr - RMat::Identity(n, n)).norm();
        double derr = std::fabs(cr.determinant() - 1.0);
        return std::max({ierr, oerr, derr});
      }
    }
    return 0;
  }
};

CMat random_group_element(const GroupOps& ops, SplitMix64& rng) {
  const int n = ops.n;
  CMat a(n, n);
  auto gauss = [&]() {
    // Box-Muller on the deterministic stream.
    double u1 = std::max(rng.unit(), 1e-300), u2 = rng.unit();
    return std::sqrt(-2 * std::log(u1)) * std::cos(kTwoPi * u2);
  };
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      a(i, j) = ops.group == Group::SO || ops.group == Group::Spin
                    ? complex<double>(gauss(), 0)
                    : complex<double>(gauss(), gauss());
  return a;
}

}  // namespace

namespace {

// Exact search inside a common maximal torus: sample signed assignments of the
// class angles onto torus slots and test the product condition in rational
// arithmetic.  Boundary instances, where the orbit intersections are
// tangential and alternating projection stalls, usually carry such commuting
// solutions.
std::optional<std::vector<CMat>> commuting_search(
    const std::vector<parahoric::StandardConjugacyClass>& classes, Group group, int n,
    uint64_t seed) {
  const int k = int(classes.size());
  const bool paired = group != Group::SU;
  const int slots = paired ? n / 2 : n;

  // Candidate angle pools per point: full vector for SU, top half otherwise.
  std::vector<std::vector<Rat>> pool(k);
  for (int w = 0; w < k; ++w) {
    const auto& l = classes[w].lambdas;
    if (paired)
      pool[w] = std::vector<Rat>(l.end() - slots, l.end());
    else
      pool[w] = l;
  }

  SplitMix64 rng(seed ^ 0xC0117E57ULL);
  std::vector<std::vector<Rat>> chosen(k, std::vector<Rat>(slots));
  for (int sample = 0; sample < 4096; ++sample) {
    for (int w = 0; w < k; ++w) {
      chosen[w] = pool[w];
      for (int i = slots - 1; i > 0; --i)
        std::swap(chosen[w][i], chosen[w][rng.below(uint64_t(i + 1))]);
      if (paired && sample > 0)
        for (int i = 0; i < slots; ++i)
          if (rng.below(2)) chosen[w][i] = -chosen[w][i];
    }
    bool ok = true;
    for (int b = 0; b < slots && ok; ++b) {
      Rat s(0);
      for (int w = 0; w < k; ++w) s += chosen[w][b];
      if (!s.is_integer()) ok = false;
    }
    if (!ok) continue;
    if (!paired) {
      // determinant per factor is already integral by the standard form
    }
    std::vector<CMat> out;
    for (int w = 0; w < k; ++w) {
      CMat c = CMat::Identity(n, n);
      if (group == Group::SU) {
        for (int i = 0; i < n; ++i) c(i, i) = std::polar(1.0, kTwoPi * chosen[w][i].to_double());
      } else if (group == Group::Sp) {
        int m = n / 2;
        for (int b = 0; b < m; ++b) {
          c(b, b) = std::polar(1.0, kTwoPi * chosen[w][b].to_double());
          c(m + b, m + b) = std::polar(1.0, -kTwoPi * chosen[w][b].to_double());
        }
      } else {  // SO: rotation blocks on the standard planes
        for (int b = 0; b < slots; ++b) {
          double th = kTwoPi * chosen[w][b].to_double();
          c(2 * b, 2 * b) = std::cos(th);
          c(2 * b, 2 * b + 1) = -std::sin(th);
          c(2 * b + 1, 2 * b) = std::sin(th);
          c(2 * b + 1, 2 * b + 1) = std::cos(th);
        }
      }
      out.push_back(c);
    }
    return out;
  }
  return std::nullopt;
}

}  // namespace

std::optional<WitnessTuple> search(
    const std::vector<parahoric::StandardConjugacyClass>& classes,
    const SearchOptions& opts) {
  parahoric::require_valid(classes);
  GroupOps ops;
  ops.group = classes[0].group;
  if (ops.group == Group::Spin) ops.group = Group::SO;  // verdicts factor through SO
  ops.n = classes[0].n;
  for (const auto& c : classes) {
    std::vector<double> t;
    for (const auto& l : c.lambdas) t.push_back(l.to_double());
    ops.targets.push_back(t);
  }
  const int k = int(classes.size());

  auto verify = [&](const std::vector<CMat>& c, int restart) -> std::optional<WitnessTuple> {
    CMat prod = CMat::Identity(ops.n, ops.n);
    for (int w = 0; w < k; ++w) prod = prod * c[w];
    double res = (prod - CMat::Identity(ops.n, ops.n)).norm();
    if (res > opts.tolerance) return std::nullopt;
    WitnessTuple out;
    out.residual = res;
    out.restart = restart;
    for (int w = 0; w < k; ++w) {
      if (ops.structure_error(c[w]) > opts.tolerance) return std::nullopt;
      double dev = class_deviation(c[w], ops.targets[w]);
      if (dev > std::max(opts.tolerance, 1e-7)) return std::nullopt;
      out.class_deviation.push_back(dev);
      out.matrices.push_back(from_eigen(c[w]));
    }
    return out;
  };

  if (auto torus = commuting_search(classes, ops.group, ops.n, opts.seed))
    if (auto found = verify(*torus, -1)) return found;

  auto attempt = [&](long long restart) -> std::optional<WitnessTuple> {
    SplitMix64 rng(opts.seed + 0x9e3779b9ULL * uint64_t(restart + 1));
    std::vector<CMat> c(k);
    for (int w = 0; w < k; ++w)
      c[w] = ops.project(w, random_group_element(ops, rng));
    for (int iter = 0; iter < opts.iterations; ++iter) {
      for (int w = 0; w < k; ++w) {
        CMat others = CMat::Identity(ops.n, ops.n);
        for (int t = 1; t < k; ++t) others = others * c[(w + t) % k];
        // product constraint: c_w * others = Id
        c[w] = ops.project(w, others.adjoint());
      }
      CMat prod = CMat::Identity(ops.n, ops.n);
      for (int w = 0; w < k; ++w) prod = prod * c[w];
      if ((prod - CMat::Identity(ops.n, ops.n)).norm() < opts.tolerance / 4) break;
    }
    return verify(c, int(restart));
  };

  int threads = std::max(1, opts.threads);
  if (threads == 1) {
    for (long long r = 0; r < opts.restart_budget; ++r)
      if (auto found = attempt(r)) return found;
    return std::nullopt;
  }
  // Chunked parallel restarts; the lowest restart index wins, so the result
  // is identical to the serial order.
  const long long chunk = 4 * threads;
  for (long long base = 0; base < opts.restart_budget; base += chunk) {
    long long hi = std::min(opts.restart_budget, base + chunk);
    std::vector<std::optional<WitnessTuple>> results(size_t(hi - base));
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) {
      pool.emplace_back([&, t]() {
        for (long long r = base + t; r < hi; r += threads) results[size_t(r - base)] = attempt(r);
      });
    }
    for (auto& th : pool) th.join();
    for (auto& r : results)
      if (r) return r;
  }
  return std::nullopt;
}

namespace {

// Real basis of the compact Lie algebra as complex matrices.
std::vector<CMat> lie_basis(Group group, int n) {
  std::vector<CMat> basis;
  auto unit = [&](int i, int j) {
    CMat m = CMat::Zero(n, n);
    m(i, j) = 1;
    return m;
  };
  const complex<double> I(0, 1);
  switch (group) {
    case Group::SO:
    case Group::Spin:
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) basis.push_back(unit(i, j) - unit(j, i));
      break;
    case Group::SU:
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
          basis.push_back(unit(i, j) - unit(j, i));
          basis.push_back(I * (unit(i, j) + unit(j, i)));
        }
      for (int i = 0; i + 1 < n; ++i) basis.push_back(I * (unit(i, i) - unit(i + 1, i + 1)));
      break;
    case Group::Sp: {
      // X = [[A, B], [-conj(B), conj(A)]] with A anti-Hermitian, B symmetric.
      int m = n / 2;
      auto embed = [&](const CMat& a, const CMat& b) {
        CMat x = CMat::Zero(n, n);
        x.block(0, 0, m, m) = a;
        x.block(0, m, m, m) = b;
        x.block(m, 0, m, m) = -b.conjugate();
        x.block(m, m, m, m) = a.conjugate();
        return x;
      };
      CMat zero = CMat::Zero(m, m);
      for (int i = 0; i < m; ++i)
        for (int j = i; j < m; ++j) {
          CMat a = CMat::Zero(m, m);
          if (i == j) {
            a(i, i) = I;
            basis.push_back(embed(a, zero));
          } else {
            a(i, j) = 1;
            a(j, i) = -1;
            basis.push_back(embed(a, zero));
            a.setZero();
            a(i, j) = I;
            a(j, i) = I;
            basis.push_back(embed(a, zero));
          }
          CMat b = CMat::Zero(m, m);
          b(i, j) = 1;
          b(j, i) = 1;
          basis.push_back(embed(zero, b));
          b.setZero();
          b(i, j) = I;
          b(j, i) = I;
          basis.push_back(embed(zero, b));
        }
      break;
    }
  }
  return basis;
}

}  // namespace

bool is_irreducible(const std::vector<Matrix>& matrices, Group group, double tolerance) {
  if (matrices.empty()) throw std::invalid_argument("empty tuple");
  const int n = matrices[0].n;
  auto basis = lie_basis(group, n);
  const int dim = int(basis.size());
  const int k = int(matrices.size());
  // Rows: real and imaginary parts of Ad(C_w)X - X over all w.
  RMat sys(2 * n * n * k, dim);
  for (int b = 0; b < dim; ++b) {
    int row = 0;
    for (int w = 0; w < k; ++w) {
      CMat cw = to_eigen(matrices[w]);
      CMat img = cw * basis[b] * cw.adjoint() - basis[b];
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
          sys(row++, b) = img(i, j).real();
          sys(row++, b) = img(i, j).imag();
        }
    }
  }
  Eigen::JacobiSVD<RMat> svd(sys);
  auto sv = svd.singularValues();
  double scale = sv.size() ? sv(0) : 1.0;
  if (scale < 1e-12) return false;  // all matrices central: fixed space is everything
  int null_dim = 0;
  for (int i = 0; i < sv.size(); ++i) {
    double s = sv(i) / scale;
    if (s < tolerance)
      ++null_dim;
    else if (s < 30 * tolerance)
      throw IllConditioned("adjoint fixed-space rank is numerically ambiguous");
  }
  return null_dim == 0;  // the centers of su, so, sp vanish
}

}  // namespace dsp::witness
