#include "dsp/solver.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <set>
#include <thread>

#include "dsp/quantum.hpp"
#include "dsp/rimhook.hpp"

namespace dsp::solver {

using parahoric::Group;
using parahoric::StandardConjugacyClass;

std::string answer_name(Answer a) {
  switch (a) {
    case Answer::YES: return "YES";
    case Answer::NO: return "NO";
    case Answer::INDETERMINATE: return "INDETERMINATE";
  }
  return "?";
}

std::vector<std::vector<Rat>> descending_weights(
    const std::vector<StandardConjugacyClass>& classes) {
  parahoric::require_valid(classes);
  std::vector<std::vector<Rat>> out;
  for (const auto& c : classes) {
    std::vector<Rat> b = c.lambdas;
    std::reverse(b.begin(), b.end());
    out.push_back(std::move(b));
  }
  return out;
}

Rat slope_term(const std::vector<std::vector<Rat>>& beta_desc, const SchubertState& st) {
  Rat s(0);
  for (size_t w = 0; w < st.index_sets.size(); ++w)
    for (int i : st.index_sets[w]) s += beta_desc[w].at(i - 1);
  return s - Rat(st.d);
}

namespace {

enum class GateStatus { Empty, Finite, Infinite, Unknown };

// One Grassmannian's worth of classes with its Gromov-Witten backend: the
// quantum module for the isotropic families, the rim-hook engine for type A.
struct RingCtx {
  int r = 1;
  liealg::Component component = liealg::Component::Whole;
  std::vector<std::vector<int>> class_sets;
  std::vector<int> codims;
  long long dim = 0;
  int c1 = 0;

  std::shared_ptr<quantum::Ring> qring;  // isotropic backend
  int a_n = 0;                           // type-A backend: Gr(r, a_n)
  std::vector<std::vector<int>> refinements;  // termwise order, type A only
  std::map<std::pair<std::vector<int>, int>, BigInt> gw_memo;
  std::map<std::pair<std::vector<int>, int>, GateStatus> status_memo;
  std::mutex mu;

  BigInt gw(const std::vector<int>& tuple, int d) {
    if (qring) return qring->gw_number_pos(tuple, d);
    long long codim_sum = 0;
    for (int c : tuple) codim_sum += codims[c];
    if (codim_sum != dim + (long long)d * c1) return BigInt(0);
    std::vector<int> key = tuple;
    std::sort(key.begin(), key.end());
    {
      std::lock_guard<std::mutex> lock(mu);
      auto it = gw_memo.find({key, d});
      if (it != gw_memo.end()) return it->second;
    }
    std::vector<std::vector<int>> sets;
    for (int c : tuple) sets.push_back(class_sets[c]);
    BigInt v = rimhook::gw_number_typeA(r, a_n, sets, d);
    std::lock_guard<std::mutex> lock(mu);
    gw_memo[{key, d}] = v;
    return v;
  }

  GateStatus status(const std::vector<int>& tuple, int d) {
    if (qring) {
      auto st = qring->state_status_pos(tuple, d);
      switch (st.kind) {
        case quantum::StateKind::Empty: return GateStatus::Empty;
        case quantum::StateKind::Finite: return GateStatus::Finite;
        case quantum::StateKind::Infinite: return GateStatus::Infinite;
      }
      return GateStatus::Empty;
    }
    // Type A: excess-dimension classification with termwise refinements.
    std::vector<int> key = tuple;
    std::sort(key.begin(), key.end());
    {
      std::lock_guard<std::mutex> lock(mu);
      auto it = status_memo.find({key, d});
      if (it != status_memo.end()) return it->second;
    }
    long long target = dim + (long long)d * c1;
    long long codim_sum = 0;
    for (int c : key) codim_sum += codims[c];
    GateStatus res;
    if (codim_sum > target) {
      res = GateStatus::Empty;
    } else if (codim_sum == target) {
      res = gw(key, d).is_zero() ? GateStatus::Empty : GateStatus::Finite;
    } else {
      const int k = int(key.size());
      std::vector<int> chosen(k);
      bool infinite = false;
      std::function<void(int, long long)> dfs = [&](int i, long long sum) {
        if (infinite) return;
        if (i == k) {
          if (sum == target && !gw(chosen, d).is_zero()) infinite = true;
          return;
        }
        long long min_rest = 0;
        for (int j = i + 1; j < k; ++j) min_rest += codims[key[j]];
        for (int q : refinements[key[i]]) {
          long long s = sum + codims[q];
          if (s + min_rest > target) continue;
          if (s + (long long)(k - i - 1) * dim < target) continue;
          chosen[i] = q;
          dfs(i + 1, s);
          if (infinite) return;
        }
      };
      dfs(0, 0);
      res = infinite ? GateStatus::Infinite : GateStatus::Empty;
    }
    std::lock_guard<std::mutex> lock(mu);
    status_memo[{key, d}] = res;
    return res;
  }
};

std::vector<std::shared_ptr<RingCtx>> make_rings(Group group, int n) {
  std::vector<std::shared_ptr<RingCtx>> rings;
  auto add_quantum = [&](liealg::Family f, int m, int r, liealg::Component c) {
    auto ctx = std::make_shared<RingCtx>();
    ctx->r = r;
    ctx->component = c;
    ctx->qring = quantum::shared_ring(f, m, r, c);
    const auto& sp = ctx->qring->space();
    ctx->class_sets = sp.index_sets;
    ctx->codims = sp.codims;
    ctx->dim = sp.dim;
    ctx->c1 = sp.c1;
    rings.push_back(std::move(ctx));
  };
  switch (group) {
    case Group::SU:
      for (int r = 1; r < n; ++r) {
        auto ctx = std::make_shared<RingCtx>();
        ctx->r = r;
        ctx->a_n = n;
        ctx->dim = (long long)r * (n - r);
        ctx->c1 = n;
        std::vector<int> cur;
        std::function<void(int)> gen = [&](int start) {
          if (int(cur.size()) == r) {
            ctx->class_sets.push_back(cur);
            return;
          }
          for (int v = start; v <= n; ++v) {
            cur.push_back(v);
            gen(v + 1);
            cur.pop_back();
          }
        };
        gen(1);
        for (const auto& I : ctx->class_sets)
          ctx->codims.push_back(
              rimhook::weight(rimhook::partition_of_index_set(r, n, I)));
        ctx->refinements.resize(ctx->class_sets.size());
        for (size_t a = 0; a < ctx->class_sets.size(); ++a)
          for (size_t b = 0; b < ctx->class_sets.size(); ++b) {
            bool deeper = true;
            for (int t = 0; t < r; ++t)
              if (ctx->class_sets[b][t] > ctx->class_sets[a][t]) deeper = false;
            if (deeper) ctx->refinements[a].push_back(int(b));
          }
        rings.push_back(std::move(ctx));
      }
      break;
    case Group::Sp:
      for (int r = 1; r <= n / 2; ++r) add_quantum(liealg::Family::C, n / 2, r,
                                                   liealg::Component::Whole);
      break;
    case Group::SO:
    case Group::Spin: {
      int m = n / 2;
      if (n % 2 == 1) {
        for (int r = 1; r <= m; ++r)
          add_quantum(liealg::Family::B, m, r, liealg::Component::Whole);
      } else {
        // Rank m-1 isotropics in SO_{2m} reduce to a non-maximal parabolic
        // (the stabilizer fixes both enveloping maximal isotropics), so their
        // slope inequalities are not part of (semi)stability and must not
        // gate the verdict.  Only r <= m-2 and the two spinor families count.
        for (int r = 1; r + 1 < m; ++r)
          add_quantum(liealg::Family::D, m, r, liealg::Component::Whole);
        add_quantum(liealg::Family::D, m, m, liealg::Component::Plus);
        add_quantum(liealg::Family::D, m, m, liealg::Component::Minus);
      }
      break;
    }
  }
  return rings;
}

// Largest d at which any state of this ring could still have slope >= 0.
int ring_d_max(const RingCtx& ring, const std::vector<std::vector<Rat>>& beta) {
  Rat total(0);
  for (const auto& bw : beta) {
    Rat best;
    bool first = true;
    for (const auto& I : ring.class_sets) {
      Rat lam(0);
      for (int i : I) lam += bw.at(i - 1);
      if (first || lam > best) {
        best = lam;
        first = false;
      }
    }
    total += best;
  }
  if (total.sign() < 0) return -1;
  return int(total.floor().to_ll());
}

struct SweepResult {
  long long states = 0;
  long long gates = 0;
  long long unknown = 0;
  std::optional<std::pair<long long, WitnessInequality>> violation;  // min index

  void merge(const SweepResult& o) {
    states += o.states;
    gates += o.gates;
    unknown += o.unknown;
    if (o.violation && (!violation || o.violation->first < violation->first))
      violation = o.violation;
  }
};

// Gate evaluation for one state; returns (gate fired?, rendered gate).
struct GateOutcome {
  bool fired = false;
  bool unknown = false;
  std::string rendered;
};

class Sweeper {
public:
  Sweeper(const std::vector<std::vector<Rat>>& beta, RingCtx& ring, Branch branch,
          Mode mode, twisted::Evaluator* twisted_eval, bool oracle_on, int n)
      : beta_(beta), ring_(ring), branch_(branch), mode_(mode),
        twisted_eval_(twisted_eval), oracle_on_(oracle_on), n_(n) {
    k_ = int(beta.size());
    for (int w = 0; w < k_; ++w) {
      std::vector<Rat> lam;
      for (const auto& I : ring.class_sets) {
        Rat v(0);
        for (int i : I) v += beta[w].at(i - 1);
        lam.push_back(v);
      }
      lam_.push_back(std::move(lam));
    }
    d_min_ = branch == Branch::Twisted ? -1 : 0;
    d_max_ = std::max(d_min_ - 1, ring_d_max(ring, beta));
  }

  long long tuple_count() const {
    long long per_d = 1;
    for (int w = 0; w < k_; ++w) per_d *= int(ring_.class_sets.size());
    return per_d * std::max(0, d_max_ - d_min_ + 1);
  }

  SweepResult run(long long begin, long long end) {
    SweepResult res;
    const int C = int(ring_.class_sets.size());
    long long per_d = 1;
    for (int w = 0; w < k_; ++w) per_d *= C;
    for (long long idx = begin; idx < end; ++idx) {
      int d = d_min_ + int(idx / per_d);
      long long t = idx % per_d;
      std::vector<int> tuple(k_);
      for (int w = k_ - 1; w >= 0; --w) {
        tuple[w] = int(t % C);
        t /= C;
      }
      ++res.states;
      Rat slope(-d);
      for (int w = 0; w < k_; ++w) slope += lam_[w][tuple[w]];
      bool relevant = mode_ == Mode::Semistable ? slope.sign() > 0 : slope.sign() >= 0;
      if (!relevant) continue;
      GateOutcome gate = evaluate_gate(tuple, d);
      if (gate.fired || gate.unknown) ++res.gates;
      if (gate.unknown) {
        ++res.unknown;
        continue;
      }
      if (!gate.fired) continue;
      WitnessInequality wi;
      wi.state.r = ring_.r;
      wi.state.d = d;
      wi.state.branch = branch_;
      wi.state.component = ring_.component;
      for (int w = 0; w < k_; ++w) wi.state.index_sets.push_back(ring_.class_sets[tuple[w]]);
      wi.slope = slope;
      wi.gate = gate.rendered;
      wi.mode = mode_;
      if (!res.violation || idx < res.violation->first) res.violation = {idx, wi};
    }
    return res;
  }

private:
  GateOutcome evaluate_gate(const std::vector<int>& tuple, int d) {
    GateOutcome out;
    if (branch_ == Branch::Trivial) {
      if (mode_ == Mode::Semistable) {
        BigInt g = ring_.gw(tuple, d);
        if (g == BigInt(1)) {
          out.fired = true;
          out.rendered = "gw=1";
        }
      } else {
        GateStatus st = ring_.status(tuple, d);
        if (st == GateStatus::Finite || st == GateStatus::Infinite) {
          out.fired = true;
          out.rendered = st == GateStatus::Finite ? "nonzero" : "infinite";
        }
      }
      return out;
    }
    // Twisted branch: consult the evaluator if enabled.
    if (!oracle_on_ || !twisted_eval_ || !ring_.qring) {
      out.unknown = true;
      out.rendered = "unknown";
      return out;
    }
    twisted::TwistedState st;
    st.n = n_;
    st.d = d;
    for (int c : tuple) st.index_sets.push_back(ring_.class_sets[c]);
    auto ev = twisted_eval_->evaluate(ring_.qring->space(), st);
    switch (ev.kind) {
      case twisted::EvalKind::Unknown:
        out.unknown = true;
        out.rendered = "unknown";
        break;
      case twisted::EvalKind::Empty:
        break;
      case twisted::EvalKind::Finite:
        if (mode_ == Mode::Semistable) {
          if (ev.count == BigInt(1)) {
            out.fired = true;
            out.rendered = "gw=1";
          }
        } else if (!ev.count.is_zero()) {
          out.fired = true;
          out.rendered = "nonzero";
        }
        break;
      case twisted::EvalKind::Infinite:
        if (mode_ == Mode::Stable) {
          out.fired = true;
          out.rendered = "infinite";
        }
        break;
    }
    return out;
  }

  const std::vector<std::vector<Rat>>& beta_;
  RingCtx& ring_;
  Branch branch_;
  Mode mode_;
  twisted::Evaluator* twisted_eval_;
  bool oracle_on_;
  int n_;
  int k_ = 0;
  int d_min_ = 0, d_max_ = -1;
  std::vector<std::vector<Rat>> lam_;
};

SweepResult run_sweep(Sweeper& sweeper, int threads) {
  long long total = sweeper.tuple_count();
  if (threads <= 1 || total < 1024) return sweeper.run(0, total);
  int nthreads = std::min<long long>(threads, 8);
  std::vector<SweepResult> parts(nthreads);
  std::vector<std::thread> pool;
  long long chunk = (total + nthreads - 1) / nthreads;
  for (int t = 0; t < nthreads; ++t) {
    long long b = t * chunk, e = std::min(total, (t + 1) * chunk);
    pool.emplace_back([&, t, b, e]() { parts[t] = sweeper.run(b, e); });
  }
  for (auto& th : pool) th.join();
  SweepResult res;
  for (const auto& p : parts) res.merge(p);  // ordered, deterministic
  return res;
}

BranchReport sweep_branch(const std::vector<std::vector<Rat>>& beta,
                          std::vector<std::shared_ptr<RingCtx>>& rings, Branch branch,
                          Mode mode, twisted::Evaluator* ev, bool oracle_on, int n,
                          int threads) {
  BranchReport rep;
  rep.branch = branch;
  SweepResult agg;
  for (auto& ring : rings) {
    Sweeper sweeper(beta, *ring, branch, mode, ev, oracle_on, n);
    SweepResult res = run_sweep(sweeper, threads);
    agg.states += res.states;
    agg.gates += res.gates;
    agg.unknown += res.unknown;
    if (res.violation && !rep.violation) rep.violation = res.violation->second;
  }
  rep.states_enumerated = agg.states;
  rep.gates_tested = agg.gates;
  rep.unknown_gates = agg.unknown;
  if (rep.violation)
    rep.holds = Answer::NO;
  else if (agg.unknown > 0)
    rep.holds = Answer::INDETERMINATE;
  else
    rep.holds = Answer::YES;
  return rep;
}

ModeVerdict combine_branches(std::vector<BranchReport> reports) {
  ModeVerdict mv;
  bool any_yes = false, all_no = true;
  for (const auto& r : reports) {
    if (r.holds == Answer::YES) any_yes = true;
    if (r.holds != Answer::NO) all_no = false;
  }
  mv.answer = any_yes ? Answer::YES : (all_no ? Answer::NO : Answer::INDETERMINATE);
  mv.branches = std::move(reports);
  return mv;
}

Verdict decide_simply_connected(const std::vector<StandardConjugacyClass>& classes,
                                Group group, const Options& opts) {
  auto beta = descending_weights(classes);
  auto rings = make_rings(group, classes[0].n);
  Verdict v;
  v.semistable = combine_branches({sweep_branch(beta, rings, Branch::Trivial,
                                                Mode::Semistable, nullptr, false,
                                                classes[0].n, opts.threads)});
  v.stable = combine_branches({sweep_branch(beta, rings, Branch::Trivial, Mode::Stable,
                                            nullptr, false, classes[0].n, opts.threads)});
  return v;
}


// The slope criterion normalizes the ambient parabolic degree to zero, so SU
// classes must be taken in their trace-zero representative: shift |sum| of the
// extreme entries by -+1 (the same conjugacy class, angles mod one).
std::vector<StandardConjugacyClass> canonicalize_su(
    std::vector<StandardConjugacyClass> classes) {
  for (auto& c : classes) {
    Rat sum(0);
    for (const auto& l : c.lambdas) sum += l;
    if (!sum.is_integer())
      throw parahoric::ValidationError("sum of lambdas must be an integer");
    long long s = sum.num().to_ll();
    while (s > 0) {
      c.lambdas.back() -= Rat(1);
      std::sort(c.lambdas.begin(), c.lambdas.end());
      --s;
    }
    while (s < 0) {
      c.lambdas.front() += Rat(1);
      std::sort(c.lambdas.begin(), c.lambdas.end());
      ++s;
    }
  }
  return classes;
}

}  // namespace

StateEnumeration enumerate_states(const std::vector<StandardConjugacyClass>& classes_in,
                                  bool with_twisted,
                                  const std::function<bool(const SchubertState&)>& sink) {
  auto classes = classes_in[0].group == Group::SU ? canonicalize_su(classes_in) : classes_in;
  auto beta = descending_weights(classes);
  auto rings = make_rings(classes[0].group, classes[0].n);
  StateEnumeration info;
  const int k = int(classes.size());
  for (auto& ring : rings) {
    int d_hi = ring_d_max(*ring, beta);
    info.d_max = std::max(info.d_max, d_hi);
    for (int branch = 0; branch < (with_twisted ? 2 : 1); ++branch) {
      int d_lo = branch ? -1 : 0;
      for (int d = d_lo; d <= d_hi; ++d) {
        const int C = int(ring->class_sets.size());
        std::vector<int> tuple(k, 0);
        bool done = false;
        while (!done) {
          SchubertState st;
          st.r = ring->r;
          st.d = d;
          st.branch = branch ? Branch::Twisted : Branch::Trivial;
          st.component = ring->component;
          for (int w = 0; w < k; ++w) st.index_sets.push_back(ring->class_sets[tuple[w]]);
          ++info.total;
          if (!sink(st)) return info;
          int w = k - 1;
          while (w >= 0 && ++tuple[w] == C) tuple[w--] = 0;
          if (w < 0) done = true;
        }
      }
    }
  }
  return info;
}

Verdict decide_sl(const std::vector<StandardConjugacyClass>& classes, const Options& opts) {
  parahoric::require_valid(classes);
  if (classes[0].group != Group::SU)
    throw parahoric::ValidationError("decide_sl expects SU classes");
  return decide_simply_connected(canonicalize_su(classes), Group::SU, opts);
}

Verdict decide_sp(const std::vector<StandardConjugacyClass>& classes, const Options& opts) {
  parahoric::require_valid(classes);
  if (classes[0].group != Group::Sp)
    throw parahoric::ValidationError("decide_sp expects Sp classes");
  return decide_simply_connected(classes, Group::Sp, opts);
}

Verdict decide_so(const std::vector<StandardConjugacyClass>& classes, const Options& opts) {
  parahoric::require_valid(classes);
  if (classes[0].group != Group::SO)
    throw parahoric::ValidationError("decide_so expects SO classes");
  auto beta = descending_weights(classes);
  const int n = classes[0].n;
  const int k = int(classes.size());
  auto rings = make_rings(Group::SO, n);
  twisted::Evaluator ev(opts.seed);

  // For even n the angle vector pins an SO class only up to the outer flip
  // (conjugation by O minus SO swaps the two families of maximal isotropics),
  // so existence quantifies over a per-point orientation choice.  Flipping
  // the orientation at a point only swaps the two middle weights of its
  // vector: the gate data is unchanged, the slopes move.
  std::vector<int> flippable;
  if (n % 2 == 0) {
    const int mid = n / 2 - 1;  // 0-based upper middle of the descending vector
    for (int w = 0; w < k; ++w)
      if (!beta[w][mid].is_zero()) flippable.push_back(w);
  }
  if (flippable.size() > 10)
    throw parahoric::ValidationError("too many marked points for the orientation sweep");

  Verdict v;
  for (Mode mode : {Mode::Semistable, Mode::Stable}) {
    std::optional<ModeVerdict> best;  // first YES, else first by epsilon order
    bool any_indeterminate = false;
    for (uint64_t mask = 0; mask < (1ull << flippable.size()); ++mask) {
      auto b = beta;
      for (size_t t = 0; t < flippable.size(); ++t)
        if (mask & (1ull << t)) {
          int w = flippable[t];
          std::swap(b[w][n / 2 - 1], b[w][n / 2]);
        }
      auto trivial = sweep_branch(b, rings, Branch::Trivial, mode, nullptr, false, n,
                                  opts.threads);
      auto tw = sweep_branch(b, rings, Branch::Twisted, mode, &ev, opts.twisted_oracle,
                             n, opts.threads);
      auto mv = combine_branches({trivial, tw});
      if (mv.answer == Answer::INDETERMINATE) any_indeterminate = true;
      if (!best) best = mv;
      if (mv.answer == Answer::YES) {
        best = mv;
        break;
      }
    }
    ModeVerdict mv = *best;
    if (mv.answer != Answer::YES && any_indeterminate)
      mv.answer = Answer::INDETERMINATE;
    (mode == Mode::Semistable ? v.semistable : v.stable) = mv;
  }
  // stable YES forces semistable YES branch-by-branch; keep the verdicts
  // consistent even when a twisted unknown clouded the weaker mode.
  if (v.stable.answer == Answer::YES && v.semistable.answer != Answer::YES)
    throw std::logic_error("stable YES must imply semistable YES");
  return v;
}

Verdict decide_spin(const std::vector<StandardConjugacyClass>& classes,
                    const Options& opts) {
  auto so = parahoric::spin_to_so(classes);
  return decide_so(so, opts);
}

Verdict decide(const std::vector<StandardConjugacyClass>& classes, const Options& opts) {
  parahoric::require_valid(classes);
  switch (classes[0].group) {
    case Group::SU: return decide_sl(classes, opts);
    case Group::Sp: return decide_sp(classes, opts);
    case Group::SO: return decide_so(classes, opts);
    case Group::Spin: return decide_spin(classes, opts);
  }
  throw std::logic_error("unreachable");
}

// ---------------------------------------------------------------------------
// Exceptional-isogeny weight maps.

namespace {

Rat mod1(const Rat& x) { return x - Rat(x.floor(), BigInt(1)); }

Rat fold_half(const Rat& x) {  // into [0, 1/2]
  Rat y = mod1(x);
  return y > Rat(1, 2) ? Rat(1) - y : y;
}

Rat fold_signed(const Rat& x) {  // into (-1/2, 1/2]
  Rat y = mod1(x);
  return y > Rat(1, 2) ? y - Rat(1) : y;
}

StandardConjugacyClass make_class(Group g, int n, std::vector<Rat> l) {
  std::sort(l.begin(), l.end());
  StandardConjugacyClass c;
  c.group = g;
  c.n = n;
  c.lambdas = std::move(l);
  return c;
}

}  // namespace

std::vector<StandardConjugacyClass> weight_map_so3(
    const std::vector<StandardConjugacyClass>& su2) {
  parahoric::require_valid(su2);
  std::vector<StandardConjugacyClass> out;
  for (const auto& c : su2) {
    if (c.group != Group::SU || c.n != 2)
      throw parahoric::ValidationError("weight_map_so3 expects SU_2 classes");
    Rat theta = fold_half(c.lambdas[1] * Rat(2));
    out.push_back(make_class(Group::SO, 3, {-theta, Rat(0), theta}));
  }
  return out;
}

std::vector<StandardConjugacyClass> weight_map_so5(
    const std::vector<StandardConjugacyClass>& sp4) {
  parahoric::require_valid(sp4);
  std::vector<StandardConjugacyClass> out;
  for (const auto& c : sp4) {
    if (c.group != Group::Sp || c.n != 4)
      throw parahoric::ValidationError("weight_map_so5 expects Sp_4 classes");
    Rat a = c.lambdas[3], b = c.lambdas[2];
    Rat t1 = fold_half(a + b), t2 = fold_half(a - b);
    out.push_back(make_class(Group::SO, 5, {-t1, -t2, Rat(0), t2, t1}));
  }
  return out;
}

std::vector<StandardConjugacyClass> weight_map_so6(
    const std::vector<StandardConjugacyClass>& su4) {
  parahoric::require_valid(su4);
  std::vector<StandardConjugacyClass> out;
  for (const auto& c : su4) {
    if (c.group != Group::SU || c.n != 4)
      throw parahoric::ValidationError("weight_map_so6 expects SU_4 classes");
    std::vector<Rat> l;
    int halves = 0;
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j) {
        Rat v = fold_signed(c.lambdas[i] + c.lambdas[j]);
        if (v == Rat(1, 2))
          ++halves;  // the eigenvalue -1; rebalance below
        else
          l.push_back(v);
      }
    // Angle 1/2 equals angle -1/2; the standard form splits them evenly.
    for (int t = 0; t < halves / 2; ++t) {
      l.push_back(Rat(1, 2));
      l.push_back(Rat(-1, 2));
    }
    if (halves % 2 != 0) throw std::logic_error("Lambda^2 gave an odd count of -1 eigenvalues");
    std::sort(l.begin(), l.end());
    for (int i = 0; i < 6; ++i)
      if (!(l[i] + l[5 - i]).is_zero())
        throw std::logic_error("Lambda^2 weights failed to be symmetric");
    out.push_back(make_class(Group::SO, 6, l));
  }
  return out;
}

namespace {

std::vector<std::vector<StandardConjugacyClass>> expand_lifts(
    const std::vector<std::vector<StandardConjugacyClass>>& per_point) {
  std::vector<std::vector<StandardConjugacyClass>> out{{}};
  for (const auto& choices : per_point) {
    std::vector<std::vector<StandardConjugacyClass>> next;
    for (const auto& partial : out)
      for (const auto& choice : choices) {
        auto t = partial;
        t.push_back(choice);
        next.push_back(std::move(t));
      }
    out = std::move(next);
  }
  // Deduplicate identical problems.
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    auto key = [](const auto& cs) {
      std::string s;
      for (const auto& c : cs)
        for (const auto& l : c.lambdas) s += l.str() + ",";
      return s;
    };
    return key(a) < key(b);
  });
  out.erase(std::unique(out.begin(), out.end(),
                        [](const auto& a, const auto& b) {
                          if (a.size() != b.size()) return false;
                          for (size_t i = 0; i < a.size(); ++i)
                            if (a[i].lambdas != b[i].lambdas) return false;
                          return true;
                        }),
            out.end());
  return out;
}

}  // namespace

std::vector<std::vector<StandardConjugacyClass>> lifts_of_so3(
    const std::vector<StandardConjugacyClass>& so3) {
  std::vector<std::vector<StandardConjugacyClass>> per_point;
  for (const auto& c : so3) {
    Rat theta = c.lambdas[2];
    std::vector<StandardConjugacyClass> choices;
    for (Rat a : {theta / Rat(2), (Rat(1) - theta) / Rat(2)})
      choices.push_back(make_class(Group::SU, 2, {-a, a}));
    if (choices[0].lambdas == choices[1].lambdas) choices.pop_back();
    per_point.push_back(choices);
  }
  return expand_lifts(per_point);
}

std::vector<std::vector<StandardConjugacyClass>> lifts_of_so5(
    const std::vector<StandardConjugacyClass>& so5) {
  std::vector<std::vector<StandardConjugacyClass>> per_point;
  for (const auto& c : so5) {
    Rat c1 = c.lambdas[4], c2 = c.lambdas[3];
    Rat a = (c1 + c2) / Rat(2), b = (c1 - c2) / Rat(2);
    std::vector<StandardConjugacyClass> choices;
    choices.push_back(make_class(Group::Sp, 4, {-a, -b, b, a}));
    Rat a2 = Rat(1, 2) - b, b2 = Rat(1, 2) - a;
    choices.push_back(make_class(Group::Sp, 4, {-a2, -b2, b2, a2}));
    if (choices[0].lambdas == choices[1].lambdas) choices.pop_back();
    per_point.push_back(choices);
  }
  return expand_lifts(per_point);
}

std::vector<std::vector<StandardConjugacyClass>> su4_center_twists(
    const std::vector<StandardConjugacyClass>& su4) {
  parahoric::require_valid(su4);
  std::vector<std::vector<StandardConjugacyClass>> per_point;
  for (const auto& c : su4) {
    // Lifts of the induced SO_6 angle data: the center twist lambda + 1/2 and
    // the outer dual -lambda (the flip of the target orientation), combined.
    std::vector<StandardConjugacyClass> choices;
    auto add = [&](std::vector<Rat> l) {
      auto cand = make_class(Group::SU, 4, std::move(l));
      for (const auto& have : choices)
        if (have.lambdas == cand.lambdas) return;
      choices.push_back(cand);
    };
    auto shift_half = [](const std::vector<Rat>& l) {
      std::vector<Rat> out;
      for (const auto& x : l) {
        Rat e = x + Rat(1, 2);
        if (e > Rat(1)) e -= Rat(2);
        out.push_back(e);
      }
      return out;
    };
    std::vector<Rat> dual;
    for (const auto& x : c.lambdas) dual.push_back(-x);
    add(c.lambdas);
    add(shift_half(c.lambdas));
    add(dual);
    add(shift_half(dual));
    per_point.push_back(choices);
  }
  return expand_lifts(per_point);
}

}  // namespace dsp::solver
