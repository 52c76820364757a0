#pragma once

// Classical Littlewood-Richardson coefficients by tableau enumeration and the
// n-rim-hook reduction computing quantum structure constants of Gr(r,n).
// This module is deliberately independent of the quantum module; the two are
// cross-checked against each other in the test and acceptance suites.

#include <map>
#include <vector>

#include "dsp/num.hpp"

namespace dsp::rimhook {

// Weakly decreasing, trailing zeros trimmed.
using Partition = std::vector<int>;

Partition normalized(Partition p);
int weight(const Partition& p);
bool fits_in_box(const Partition& p, int rows, int cols);

// Number of LR skew tableaux of shape nu/lambda and content mu; zero when the
// shapes are incompatible. Pre: |nu| = |lambda| + |mu|.
BigInt lr_coefficient(const Partition& lambda, const Partition& mu, const Partition& nu);

// Quantum structure constant <sigma_lambda, sigma_mu, sigma_{nu^dual}>_d on
// Gr(r,n), computed by reducing the classical expansion with n-rim-hooks.
BigInt quantum_lr(int r, int n, const Partition& lambda, const Partition& mu,
                  const Partition& nu, int d);

// Full quantum product expansion of sigma_lambda * sigma_mu on Gr(r,n):
// map (nu, d) -> coefficient.
std::map<std::pair<Partition, int>, BigInt> quantum_product(int r, int n,
                                                            const Partition& lambda,
                                                            const Partition& mu);

// Index-set conventions: I = { n - r + j - lambda_j : j = 1..r }, ascending.
Partition partition_of_index_set(int r, int n, const std::vector<int>& I);
std::vector<int> index_set_of_partition(int r, int n, const Partition& lambda);
Partition dual_in_box(int r, int n, const Partition& lambda);

// Gromov-Witten number for Gr(r,n): k >= 2 classes given as index sets.
BigInt gw_number_typeA(int r, int n, const std::vector<std::vector<int>>& index_sets,
                       int d);

// Same, with classes given as partitions.
BigInt gw_number_typeA_partitions(int r, int n, const std::vector<Partition>& classes,
                                  int d);

}  // namespace dsp::rimhook
