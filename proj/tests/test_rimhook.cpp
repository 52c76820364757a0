#include <functional>
#include <map>

#include "doctest.h"
#include "dsp/rimhook.hpp"

using namespace dsp::rimhook;
using dsp::BigInt;

TEST_CASE("Pieri and identity cases") {
  CHECK(lr_coefficient({1}, {1}, {2}) == BigInt(1));
  CHECK(lr_coefficient({1}, {1}, {1, 1}) == BigInt(1));
  CHECK(lr_coefficient({2, 1}, {}, {2, 1}) == BigInt(1));
  CHECK(lr_coefficient({}, {2, 1}, {2, 1}) == BigInt(1));
  CHECK(lr_coefficient({2}, {1}, {2, 1}) == BigInt(1));
  CHECK(lr_coefficient({1}, {2}, {2, 1}) == BigInt(1));
  CHECK(lr_coefficient({2, 1}, {1}, {2, 2}) == BigInt(1));
}

TEST_CASE("classic multiplicity two and symmetry") {
  // s_{21} * s_{21} contains s_{321} with multiplicity 2.
  CHECK(lr_coefficient({2, 1}, {2, 1}, {3, 2, 1}) == BigInt(2));
  // Symmetry in lambda, mu on a random-ish sample.
  std::vector<Partition> ps = {{1}, {2}, {1, 1}, {2, 1}, {3, 1}, {2, 2}, {3, 2, 1}};
  for (const auto& a : ps)
    for (const auto& b : ps) {
      Partition nu = {4, 3, 2};  // |nu| = 9
      if (weight(a) + weight(b) != 9) continue;
      CHECK(lr_coefficient(a, b, nu) == lr_coefficient(b, a, nu));
    }
}

TEST_CASE("classical products preserve total codimension") {
  auto prod = quantum_product(3, 7, {2, 1}, {2, 2});
  for (const auto& [key, coeff] : prod) {
    CHECK(!coeff.is_zero());
    CHECK(weight(key.first) + 7 * key.second == 7);
  }
}

TEST_CASE("rim hook reductions on small Grassmannians") {
  // Gr(1,2): sigma_1 * sigma_1 = q.
  CHECK(quantum_lr(1, 2, {1}, {1}, {}, 1) == BigInt(1));
  CHECK(quantum_lr(1, 2, {1}, {1}, {1}, 0) == BigInt(0));
  // d = 0 reduces to the classical coefficient.
  CHECK(quantum_lr(2, 4, {1}, {1}, {2}, 0) == BigInt(1));
  CHECK(quantum_lr(2, 4, {1}, {1}, {1, 1}, 0) == BigInt(1));
  // Gr(2,4): sigma_{22} * sigma_{22} = q^2.
  CHECK(quantum_lr(2, 4, {2, 2}, {2, 2}, {}, 2) == BigInt(1));
  // Gr(2,4): sigma_{21} * sigma_{21} = q * sigma_{11} + q * sigma_2? Check by
  // expansion: classical part lands outside the box entirely.
  auto prod = quantum_product(2, 4, {2, 1}, {2, 1});
  BigInt total(0);
  for (const auto& [key, coeff] : prod) {
    CHECK(key.second >= 1);  // no classical term survives
    total += coeff;
  }
  CHECK(total == BigInt(2));
}

TEST_CASE("partition and index set dictionary") {
  CHECK(partition_of_index_set(2, 4, {3, 4}) == Partition{});
  CHECK(partition_of_index_set(2, 4, {1, 2}) == Partition{2, 2});
  CHECK(index_set_of_partition(2, 4, {2, 2}) == std::vector<int>{1, 2});
  CHECK(index_set_of_partition(2, 4, {}) == std::vector<int>{3, 4});
  CHECK(dual_in_box(2, 4, {2}) == Partition{2});
  CHECK(dual_in_box(2, 4, {1}) == Partition{2, 1});
  for (int r = 1; r <= 3; ++r) {
    // Round trip through the dictionary.
    auto sets = std::vector<std::vector<int>>{};
    std::function<void(int, std::vector<int>&)> gen = [&](int start, std::vector<int>& cur) {
      if (int(cur.size()) == r) {
        sets.push_back(cur);
        return;
      }
      for (int v = start; v <= 5; ++v) {
        cur.push_back(v);
        gen(v + 1, cur);
        cur.pop_back();
      }
    };
    std::vector<int> cur;
    gen(1, cur);
    for (const auto& I : sets)
      CHECK(index_set_of_partition(r, 5, partition_of_index_set(r, 5, I)) == I);
  }
}

TEST_CASE("type A Gromov-Witten numbers") {
  // Duality: <sigma_I, sigma_{I dual}>_0 = 1.
  for (const auto& la : std::vector<Partition>{{}, {1}, {2}, {1, 1}, {2, 1}, {2, 2}}) {
    auto dual = dual_in_box(2, 4, la);
    CHECK(gw_number_typeA_partitions(2, 4, {la, dual}, 0) == BigInt(1));
  }
  // <pt, pt, pt>_1 on Gr(1,2) = 1 (three-point count on the line).
  CHECK(gw_number_typeA(1, 2, {{1}, {1}, {1}}, 1) == BigInt(1));
  // Grading violations vanish.
  CHECK(gw_number_typeA(1, 2, {{1}, {1}, {1}}, 0) == BigInt(0));
  CHECK(gw_number_typeA(2, 4, {{1, 2}, {1, 2}, {1, 2}}, 1) == BigInt(0));
  // <pt, pt, pt>_2 on Gr(2,4) = 1: the unique degree-two map through three
  // general points.
  CHECK(gw_number_typeA(2, 4, {{1, 2}, {1, 2}, {1, 2}}, 2) == BigInt(1));
  // Quantum Pieri spot checks on Gr(2,4).
  CHECK(quantum_lr(2, 4, {2}, {1, 1}, {}, 1) == BigInt(1));
  CHECK(quantum_lr(2, 4, {2}, {2}, {}, 1) == BigInt(0));
  CHECK(quantum_lr(2, 4, {2}, {2}, {2, 2}, 0) == BigInt(1));
  CHECK(quantum_lr(2, 4, {2, 1}, {2, 1}, {2}, 1) == BigInt(1));
  CHECK(quantum_lr(2, 4, {2, 1}, {2, 1}, {1, 1}, 1) == BigInt(1));
}
