#pragma once

// Numeric corroboration: search for explicit group elements in the prescribed
// conjugacy classes multiplying to the identity, and test irreducibility of a
// found tuple through the adjoint fixed-space criterion.  Never consulted by
// the exact verdicts; a Found is positive evidence, NotFound means nothing.

#include <complex>
#include <optional>
#include <vector>

#include "dsp/parahoric.hpp"

namespace dsp::witness {

struct Matrix {
  int n = 0;
  std::vector<std::complex<double>> a;  // row-major n x n
  std::complex<double>& at(int i, int j) { return a[size_t(i) * n + j]; }
  const std::complex<double>& at(int i, int j) const { return a[size_t(i) * n + j]; }
};

struct WitnessTuple {
  std::vector<Matrix> matrices;
  double residual = 0;                  // Frobenius norm of product - Id
  std::vector<double> class_deviation;  // per point, eigenphase mismatch
  int restart = -1;
};

struct SearchOptions {
  double tolerance = 1e-10;
  long long restart_budget = 200;
  uint64_t seed = 20240817;
  int iterations = 500;
  int threads = 1;
};

// Deterministic given the seed; Found implies the tuple verifies within
// tolerance (group constraint, spectrum, product).
std::optional<WitnessTuple> search(
    const std::vector<parahoric::StandardConjugacyClass>& classes,
    const SearchOptions& opts = {});

class IllConditioned : public std::runtime_error {
public:
  explicit IllConditioned(const std::string& w) : std::runtime_error(w) {}
};

// Joint Ad-fixed subspace of the Lie algebra has the dimension of the center
// (zero for these groups) iff the tuple is irreducible.  Throws IllConditioned
// when the rank decision is numerically ambiguous.
bool is_irreducible(const std::vector<Matrix>& matrices, parahoric::Group group,
                    double tolerance = 1e-8);

}  // namespace dsp::witness
