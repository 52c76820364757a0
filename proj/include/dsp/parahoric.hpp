#pragma once

// Problem data model: conjugacy classes of the classical compact groups in
// standard form, the flag-and-weight view at each marked point, structural
// validation, the weight transform onto the symmetric-about-zero window, the
// underlying degree, and the Spin -> SO projection.
//
// Standard form: lambda_1 <= ... <= lambda_n with exact rational entries; for
// Sp/SO/Spin additionally lambda_i + lambda_{n+1-i} = 0 and lambda_n <= 1/2.
// Eigenvalues of the class are exp(2 pi i lambda_j).

#include <optional>
#include <string>
#include <vector>

#include "dsp/num.hpp"

namespace dsp::parahoric {

enum class Group { SU, Sp, SO, Spin };

std::string group_name(Group g);

struct StandardConjugacyClass {
  Group group = Group::SU;
  int n = 0;                 // matrix size (2n for Sp means n here is even)
  std::vector<Rat> lambdas;  // sorted ascending, size n
};

// One marked point of the flag view: dims of F^m < ... < F^1 (proper, inside
// V of dimension n) with weights 0 <= a^1 < ... < a^m < 1 attached to
// F^1..F^m.  The weight multiset with graded multiplicities must be symmetric
// about 1/2 away from zero.
struct FlagPoint {
  std::string label;
  std::vector<int> flag_dims;  // dim F^1 >= dim F^2 >= ... (strictly decreasing)
  std::vector<Rat> weights;    // ascending, attached to F^1..F^m
};

struct ParabolicDatum {
  Group group = Group::SO;
  int n = 0;
  std::vector<FlagPoint> points;
};

// Transformed weights: per point a sorted rational n-vector in (-1/2, 1/2],
// symmetric about zero.  This is the standard form again; the two views agree
// after the alpha -> alpha - 1 shift above 1/2.
struct TransformedWeights {
  std::vector<std::vector<Rat>> per_point;
};

struct Violation {
  std::string clause;  // names the failed structural rule
  int point = -1;      // -1 for problem-level violations
};

class ValidationError : public std::runtime_error {
public:
  explicit ValidationError(const std::string& w) : std::runtime_error(w) {}
};

// Structural validation.  Returns the full list of violations (empty = ok).
std::vector<Violation> validate(const StandardConjugacyClass& cls);
std::vector<Violation> validate(const std::vector<StandardConjugacyClass>& classes);
std::vector<Violation> validate(const ParabolicDatum& datum);

// Throwing convenience wrappers.
void require_valid(const std::vector<StandardConjugacyClass>& classes);
void require_valid(const ParabolicDatum& datum);

// Class list <-> flag/weight view.  Mutually inverse on valid data.
ParabolicDatum class_to_datum(const std::vector<StandardConjugacyClass>& classes);
std::vector<StandardConjugacyClass> datum_to_class(const ParabolicDatum& datum);

// Weight transform: weights above 1/2 shift down by one, weight 1/2 splits
// into +-1/2 with half multiplicity each.  Output per point is the sorted
// symmetric n-vector.
TransformedWeights transform_weights(const ParabolicDatum& datum);

// underlying degree = -1/2 sum_x dim F^1_x.
long long underlying_degree(const ParabolicDatum& datum);

// True iff no point carries weight exactly 1/2 (honest parabolic bundle).
bool is_parabolic_reducible(const ParabolicDatum& datum);

// One step of the parahoric -> parabolic flag chain at a single point: the
// Hecke modification by a maximal isotropic K inside F^1.  Entries are listed
// by inclusion order (smallest subspace first) with their transformed weights;
// in_kernel marks pieces landing in ker(V~ -> K).
struct HeckeChainEntry {
  int dim = 0;
  Rat weight;
  bool in_kernel = false;
};
std::vector<HeckeChainEntry> hecke_flag_transform(const FlagPoint& point, int n,
                                                  bool alternate_choice = false);

// Spin classes project to SO classes; verdicts factor through this map.
std::vector<StandardConjugacyClass> spin_to_so(
    const std::vector<StandardConjugacyClass>& classes);

}  // namespace dsp::parahoric
