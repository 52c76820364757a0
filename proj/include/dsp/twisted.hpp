#pragma once

// Evaluator for Schubert states on the twisted orthogonal bundle
// W = O(1) + O(-1) + O^{n-2} on the line (the nontrivial deformation class of
// orthogonal bundles).  The number attached to a state is the count of
// isotropic rank-r degree-(-d) sub-bundles of W whose fibers at the marked
// points satisfy the prescribed Schubert conditions, for generic isotropic
// flags; Infinite when the solution family is positive dimensional, Unknown
// when no exact method covers the state.
//
// The built-in oracle is exact on:
//   - any n, r = 1, d = -1 (the O(1) summand is the only candidate),
//   - any n, r = 1, d = 0 (a single quadric in an exactly computed linear
//     section; arithmetic over the Gaussian rationals),
//   - n = 3, r = 1, any d (the isotropic parametrization (A^2, -B^2/2, AB)
//     turns all conditions linear; even d carries no sub-bundles at all),
//   - any state whose dimension count is negative (Empty).
// Everything else defers to registered engines and otherwise reports Unknown.

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "dsp/liealg.hpp"
#include "dsp/num.hpp"

namespace dsp::twisted {

struct TwistedState {
  int n = 3;   // rank of W
  int d = -1;  // sub-bundle degree is -d; d >= -1
  // Schubert conditions per marked point, as admissible index sets of the
  // fiber space OG(r, n) (component-resolved in type D).
  std::vector<std::vector<int>> index_sets;
};

enum class EvalKind { Empty, Finite, Infinite, Unknown };

struct Evaluation {
  EvalKind kind = EvalKind::Unknown;
  BigInt count;        // for Finite
  std::string method;  // which engine decided
};

class EngineConflict : public std::runtime_error {
public:
  explicit EngineConflict(const std::string& w) : std::runtime_error(w) {}
};

class Engine {
public:
  virtual ~Engine() = default;
  virtual std::string name() const = 0;
  // nullopt when the engine does not cover the state.
  virtual std::optional<Evaluation> evaluate(const liealg::GrassmannianSpace& fiber,
                                             const TwistedState& state) = 0;
};

class Evaluator {
public:
  explicit Evaluator(uint64_t seed = 0x9d5f2c01u);

  // Engines are consulted in registration order after the built-in oracle;
  // definite answers on overlapping domains must agree.
  void register_engine(std::shared_ptr<Engine> engine);

  Evaluation evaluate(const liealg::GrassmannianSpace& fiber, const TwistedState& state);

private:
  uint64_t seed_;
  std::vector<std::shared_ptr<Engine>> engines_;
};

// Expected dimension of the space of isotropic rank-r degree-(-d) sub-bundles
// of W (deformation invariant, so the same as on the trivial bundle).
long long expected_dim(const liealg::GrassmannianSpace& fiber, int d);

}  // namespace dsp::twisted
