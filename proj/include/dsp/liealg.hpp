#pragma once

// Root systems and Weyl combinatorics for the classical families A, B, C, D.
//
// Elements are stored as signed one-line permutations: w maps letter i to the
// signed letter w(i), with w(-i) = -w(i).  Type A uses plain permutations on
// rank+1 letters.  Roots live in the orthonormal coordinate realization, so
// all pairings are integer dot products (type B fundamental weights are
// half-integral; the few places needing them use exact rationals).
//
// Low ranks are supported natively rather than through translation tables:
// B_1, C_1, D_2 and D_3 are perfectly good root systems here, and the isogeny
// checks (B_1 ~ A_1, C_1 ~ A_1, D_2 ~ A_1 x A_1, D_3 ~ A_3, B_2 ~ C_2) are
// enforced in the test suite instead of being wired into the construction.

#include <map>
#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

#include "dsp/num.hpp"

namespace dsp::liealg {

enum class Family { A, B, C, D };

std::string family_name(Family f);

class UnsupportedRank : public std::runtime_error {
public:
  explicit UnsupportedRank(const std::string& w) : std::runtime_error(w) {}
};
class InadmissibleIndexSet : public std::runtime_error {
public:
  explicit InadmissibleIndexSet(const std::string& w) : std::runtime_error(w) {}
};

using IntVec = std::vector<int>;

struct RootSystem {
  Family family;
  int rank = 0;
  int letters = 0;  // coordinate dimension: rank+1 for A, rank otherwise

  std::vector<IntVec> positive_roots;
  std::vector<IntVec> positive_coroots;          // paired with positive_roots
  std::vector<IntVec> simple_roots;              // nodes 1..rank (index 0-based)
  std::vector<IntVec> simple_coroots;
  std::vector<std::vector<int>> pos_in_simple;   // expansion of each positive root
                                                 // in the simple-root basis
  std::vector<std::vector<int>> pos_coroot_in_simple;  // coroots in simple coroots
  std::vector<int> two_rho_pairing;              // <2 rho, alpha^vee> per pos root

  // All roots, positives then negatives; reflections permute this list.
  std::vector<IntVec> all_roots() const;

  static RootSystem build(Family f, int rank);
};

// Interned Weyl group with length, composition, Bruhat order.
class WeylGroup {
public:
  explicit WeylGroup(RootSystem rs);

  const RootSystem& roots() const { return rs_; }
  int size() const { return int(elements_.size()); }
  int identity() const { return 0; }
  int length(int w) const { return lengths_[w]; }
  const std::vector<int>& one_line(int w) const { return elements_[w]; }

  int simple_reflection(int node) const { return simple_refl_[node - 1]; }  // 1-based
  int reflection(int pos_root_idx) const { return pos_refl_[pos_root_idx]; }

  int compose(int u, int w) const;  // u after w: (u*w)(i) = u(w(i))
  int inverse(int w) const;
  int longest() const { return longest_; }
  // Longest element of the standard parabolic generated by `nodes` (1-based).
  int longest_parabolic(const std::vector<int>& nodes) const;

  // Image of a coordinate vector under w.
  IntVec apply(int w, const IntVec& v) const;
  // Signed image of signed letter l under w.
  int apply_letter(int w, int l) const;

  // l(w s_alpha) - l(w) for the reflection of positive root #idx.
  int length_change(int w, int pos_root_idx) const {
    return lengths_[compose_right_refl(w, pos_root_idx)] - lengths_[w];
  }
  int compose_right_refl(int w, int pos_root_idx) const {
    return compose(w, pos_refl_[pos_root_idx]);
  }

  // True iff w(alpha_node) < 0, i.e. s_node is a right descent of w.
  bool right_descent(int w, int node) const;

  // Bruhat order, memoized.
  bool bruhat_leq(int u, int w) const;

  // Minimal representative of w W_J for the parabolic given by `nodes`.
  int coset_min(int w, const std::vector<int>& nodes) const;

  int element_id(const std::vector<int>& one_line) const;  // -1 if absent

private:
  bool root_sent_negative(int w, const IntVec& root) const;

  RootSystem rs_;
  std::vector<std::vector<int>> elements_;
  std::vector<int> lengths_;
  std::vector<int> simple_refl_;
  std::vector<int> pos_refl_;
  std::unordered_map<std::string, int> index_;
  int longest_ = 0;
  mutable std::unordered_map<uint64_t, bool> bruhat_memo_;
};

std::shared_ptr<WeylGroup> shared_weyl_group(Family f, int rank);

// Component tag distinguishing the two families of maximal isotropics in type
// D; Whole everywhere else.
enum class Component { Whole, Plus, Minus };

// Grassmannian of r-dimensional (isotropic) subspaces, presented through its
// Weyl-combinatorial shadow: minimal coset representatives, index sets,
// codimensions, duality.
struct GrassmannianSpace {
  Family family;
  int group_rank = 0;
  int r = 0;
  Component component = Component::Whole;
  int ambient = 0;  // n for orthogonal/linear, 2n for symplectic

  long long dim = 0;
  int c1 = 0;                      // anticanonical pairing per unit of subsheaf degree
  std::vector<int> removed_nodes;  // H_2 basis nodes (1-based)
  std::vector<int> kappa;          // subsheaf degree of the node curve classes
  std::vector<int> c1_node;        // anticanonical pairing per node curve class
  std::vector<int> parabolic_nodes;  // Delta_P

  std::shared_ptr<WeylGroup> W;
  std::vector<int> basis;                 // minimal reps, sorted by (length, one-line)
  std::vector<std::vector<int>> index_sets;  // per basis position, sorted increasing
  std::vector<int> codims;                // = lengths
  std::vector<int> pd;                    // Poincare duality on basis positions
  std::map<std::vector<int>, int> index_lookup;  // sorted I -> basis position

  int num_classes() const { return int(basis.size()); }
  int basis_pos_of_rep(int rep) const;
  // Throws InadmissibleIndexSet with the failing clause named.
  int basis_pos_of_index_set(const std::vector<int>& I) const;
  bool admissible(const std::vector<int>& I) const {
    return index_lookup.count(I) != 0;
  }

  // Positions of codimension-1 classes (one per removed node).
  std::vector<int> divisor_positions() const;

  // Bruhat down-set of a basis position, within the basis.
  const std::vector<int>& down_set(int pos) const;

  std::string name() const;

private:
  mutable std::vector<std::vector<int>> down_sets_;
};

// Builds the space, validating rank bounds and the dimension/degree closed
// forms against the enumerated representatives.
GrassmannianSpace build_space(Family f, int group_rank, int r,
                              Component component = Component::Whole);

// Convenience: minimal representatives ordered by length then one-line.
std::vector<int> minimal_reps(const GrassmannianSpace& space);

// Index-set conversions named as operations.
int index_set_to_rep(const GrassmannianSpace& space, const std::vector<int>& I);
std::vector<int> rep_to_index_set(const GrassmannianSpace& space, int rep);
int codim(const GrassmannianSpace& space, const std::vector<int>& I);
std::vector<int> poincare_dual_index_set(const GrassmannianSpace& space,
                                         const std::vector<int>& I);

}  // namespace dsp::liealg
