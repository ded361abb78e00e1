#pragma once

#include <vector>

#include "tdouble/cocycle.hpp"
#include "tdouble/exact_linalg.hpp"
#include "tdouble/module.hpp"

namespace tdouble {

/// The twisted group algebra F^alpha[G] over Q(zeta_N), basis {g-bar}, with
/// (a x-bar)(b y-bar) = ab alpha(x,y) (xy)-bar.
class TwistedGroupAlgebra {
 public:
  /// Throws InvalidCocycle when alpha fails validation.
  explicit TwistedGroupAlgebra(TwoCocycle alpha);

  const GroupPtr& group_ptr() const { return alpha_.group(); }
  const FiniteGroup& group() const { return *alpha_.group(); }
  const TwoCocycle& cocycle() const { return alpha_; }
  int dim() const { return group().order(); }
  const Cyc& alpha(Element x, Element y) const { return values_[static_cast<std::size_t>(x) * dim() + y]; }

  StructureConstants structure() const;

 private:
  TwoCocycle alpha_;
  std::vector<Cyc> values_;
};

/// An element sum_g c_g g-bar. The algebra must outlive the element.
struct AlgebraElement {
  const TwistedGroupAlgebra* algebra = nullptr;
  std::vector<Cyc> coeffs;

  static AlgebraElement zero(const TwistedGroupAlgebra& a);
  static AlgebraElement basis(const TwistedGroupAlgebra& a, Element g, const Cyc& c = Cyc(1));
  static AlgebraElement one(const TwistedGroupAlgebra& a) { return basis(a, a.group().identity()); }

  bool is_zero() const;
  AlgebraElement& operator+=(const AlgebraElement& other);
  AlgebraElement& operator-=(const AlgebraElement& other);
  AlgebraElement& operator*=(const Cyc& s);
  friend bool operator==(const AlgebraElement& a, const AlgebraElement& b);
};

/// Throws MismatchedAlgebra when the factors belong to different algebras.
AlgebraElement tga_multiply(const AlgebraElement& a, const AlgebraElement& b);

/// g-bar^{-1} = alpha(g^{-1}, g)^{-1} (g^{-1})-bar.
AlgebraElement basis_inverse(const TwistedGroupAlgebra& a, Element g);

/// True when x commutes with every basis element.
bool is_central(const AlgebraElement& x);

/// z_i = sum_{t in T_i} t-bar g_i-bar t-bar^{-1}, one per alpha-regular class,
/// with T_i the greedy left transversal of C_G(g_i). Centrality and linear
/// independence are checked before returning.
std::vector<AlgebraElement> center_basis(const TwistedGroupAlgebra& a);

/// Left multiplication matrices L_g-bar, column b holding g-bar times b-bar.
ExactModule regular_representation(const TwistedGroupAlgebra& a);

/// T(x-bar, y-bar) = trace(L_x-bar L_y-bar), computed from the regular representation.
CycMatrix trace_form(const TwistedGroupAlgebra& a);

/// Dickson's criterion: the trace form is nondegenerate.
bool is_semisimple(const TwistedGroupAlgebra& a);

}  // namespace tdouble
