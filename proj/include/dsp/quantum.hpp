#pragma once

// Exact small quantum cohomology of the (isotropic) Grassmannians.
//
// The computation runs in two stages.  A per-group engine computes products in
// QH*(G/B) from the quantum Bruhat graph: multiplication by the divisor
// classes is the quantum Chevalley formula
//
//   sigma_{s_i} * sigma_w  =  sum_{alpha : l(w s_a) = l(w)+1} <omega_i, alpha^vee> sigma_{w s_a}
//                           + sum_{alpha : l(w s_a) = l(w)+1-<2rho,alpha^vee>}
//                                 <omega_i, alpha^vee> q^{alpha^vee} sigma_{w s_a},
//
// and arbitrary products follow by induction on length: the divisor products
// of the level-(l-1) classes determine the level-l unknowns through an exact
// rational solve (the coinvariant algebra is generated in degree two, so the
// system has full rank).  Products on G/P are then read off through the
// Peterson comparison: the coefficient of q^{d_P} sigma_w in sigma_u *_P
// sigma_v equals the coefficient of q^{d_B} sigma_{w wP wP'} in the G/B
// product, where d_B is the unique lift of d_P with <alpha, d_B> in {-1, 0}
// for all alpha in R_P^+ and P' = {alpha in Delta_P : <alpha, d_B> = 0}.
//
// q-degrees are normalized to subsheaf degree: q^d tracks isotropic
// sub-sheaves of degree -d.  For maximal orthogonal Grassmannians the minimal
// curve class has subsheaf degree two, and for OG(m-1, 2m) the two spinor
// degrees collapse onto their sum; both normalizations fall out of the pairing
// of det S^* with the node curve classes.

#include <map>
#include <memory>
#include <set>
#include <mutex>
#include <vector>

#include "dsp/liealg.hpp"
#include "dsp/num.hpp"

namespace dsp::quantum {

// Exact linear combination of (Schubert class, q-power) pairs.  Terms are
// keyed by (basis position in the ring, subsheaf q-degree); zero coefficients
// are never stored.
struct QHElement {
  std::map<std::pair<int, int>, BigInt> terms;

  void add(int pos, int d, const BigInt& c);
  bool operator==(const QHElement& o) const { return terms == o.terms; }
};

struct GWQuery {
  std::vector<std::vector<int>> classes;  // k >= 2 index sets
  int d = 0;
};

enum class StateKind { Empty, Finite, Infinite };

struct StateStatus {
  StateKind kind = StateKind::Empty;
  BigInt count;             // meaningful for Finite
  int excess = 0;           // dim + d c1 - sum codim
  // For Infinite: a refinement of exact codimension with nonzero number.
  std::vector<std::vector<int>> witness_refinement;
};

class GBEngine;  // internal

class Ring {
public:
  explicit Ring(liealg::GrassmannianSpace space);

  const liealg::GrassmannianSpace& space() const { return space_; }

  QHElement basis_element(const std::vector<int>& I) const;
  std::vector<int> poincare_dual(const std::vector<int>& I) const;

  // Quantum product of two Schubert classes given by index sets.
  QHElement product(const std::vector<int>& u, const std::vector<int>& v);
  QHElement product(const QHElement& a, const QHElement& b);

  // Multiplication by the primitive ample divisor (the sum of the codim-1
  // Schubert classes; a single class except on OG(m-1,2m)).
  QHElement chevalley_product(const QHElement& elem);

  BigInt gw_number(const GWQuery& query);

  StateStatus state_status(const std::vector<std::vector<int>>& classes, int d);

  // Position-level variants used by the solver.
  BigInt gw_number_pos(const std::vector<int>& positions, int d);
  StateStatus state_status_pos(std::vector<int> positions, int d);
  const QHElement& product_pos(int u_pos, int v_pos);

private:
  void ensure_column(int v_pos);

  liealg::GrassmannianSpace space_;
  std::shared_ptr<GBEngine> engine_;
  std::map<std::pair<int, int>, QHElement> table_;
  std::set<int> columns_done_;
  std::map<std::pair<std::vector<int>, int>, BigInt> gw_memo_;
  std::map<std::pair<std::vector<int>, int>, StateStatus> status_memo_;
  std::mutex mu_;
};

std::shared_ptr<Ring> shared_ring(liealg::Family f, int group_rank, int r,
                                  liealg::Component c = liealg::Component::Whole);

}  // namespace dsp::quantum
