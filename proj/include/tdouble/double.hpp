#pragma once

#include <string>
#include <vector>

#include "tdouble/cocycle.hpp"
#include "tdouble/module.hpp"
#include "tdouble/twisted_algebra.hpp"

namespace tdouble {

/// The generalized twisted double A_alpha(G,S) on C[G] (x) CS with basis
/// d_{g,s} = g (x) e(s) and product
///   d_{g,s} d_{h,t} = delta_{s.h, t} alpha_t(g,h) d_{gh,t}.
/// Basis index of d_{g,s} is g * |S| + s.
class GeneralizedDouble {
 public:
  /// Throws InvalidCocycle when alpha fails the set-cocycle law.
  explicit GeneralizedDouble(SetCocycle alpha);

  const GroupPtr& group_ptr() const { return alpha_.group(); }
  const FiniteGroup& group() const { return *alpha_.group(); }
  const RightGSet& gset() const { return *alpha_.gset(); }
  const SetCocycle& cocycle() const { return alpha_; }
  int set_size() const { return gset().size(); }
  int dim() const { return group().order() * set_size(); }
  int index(Element g, int s) const { return g * set_size() + s; }
  Element element_of(int i) const { return i / set_size(); }
  int point_of(int i) const { return i % set_size(); }
  const Cyc& alpha(int s, Element x, Element y) const {
    return values_[(static_cast<std::size_t>(s) * group().order() + x) * group().order() + y];
  }

  StructureConstants structure() const;

 private:
  SetCocycle alpha_;
  std::vector<Cyc> values_;
};

/// An element sum c_{g,s} d_{g,s}. The double must outlive the element.
struct DoubleElement {
  const GeneralizedDouble* algebra = nullptr;
  std::vector<Cyc> coeffs;

  static DoubleElement zero(const GeneralizedDouble& d);
  static DoubleElement basis(const GeneralizedDouble& d, Element g, int s, const Cyc& c = Cyc(1));

  bool is_zero() const;
  DoubleElement& operator+=(const DoubleElement& other);
  DoubleElement& operator-=(const DoubleElement& other);
  DoubleElement& operator*=(const Cyc& s);
  friend bool operator==(const DoubleElement& a, const DoubleElement& b);
};

/// Throws MismatchedAlgebra for elements of different doubles.
DoubleElement double_multiply(const DoubleElement& a, const DoubleElement& b);

/// sum_t d_{1,t}
DoubleElement double_identity(const GeneralizedDouble& d);
/// sum_{t in O_s} d_{1,t}, the identity of the block D(O_s).
DoubleElement orbit_identity(const GeneralizedDouble& d, int s);

/// The basis-diagonal map f(d_{g,s}) = lambda_s(g)^{-1} d_{g,s} from
/// A_alpha to A_beta with beta = alpha composed with lambda.
struct CohomologousIso {
  std::vector<Cyc> diagonal;  // indexed by basis index

  DoubleElement apply(const GeneralizedDouble& target, const DoubleElement& x) const;
};

/// Throws CoboundaryMismatch unless to.cocycle() == apply_coboundary(from.cocycle(), lambda).
CohomologousIso cohomologous_iso(const GeneralizedDouble& from, const GeneralizedDouble& to,
                                 const SetCoboundary& lambda);

/// f(ab) = f(a) f(b) on every basis pair, and f invertible.
bool is_algebra_isomorphism(const CohomologousIso& f, const GeneralizedDouble& from, const GeneralizedDouble& to);

struct OrbitBlock {
  int representative = 0;  // s_j, the smallest label in the orbit
  std::vector<int> orbit;  // orbit[i] = s_j . g_i
  std::vector<Element> stabilizer;
  CosetTransversal transversal;  // right cosets G_s g_i
  std::vector<int> basis;        // indices of D(O_s), ascending
};

struct BlockDecomposition {
  std::vector<OrbitBlock> orbits;
};

/// Basis index sets of the subspaces attached to a point s.
std::vector<int> stabilizer_subspace(const GeneralizedDouble& d, int s);  // S(s)
std::vector<int> nilpotent_subspace(const GeneralizedDouble& d, int s);   // N(s)
std::vector<int> point_subspace(const GeneralizedDouble& d, int s);       // D(s)

BlockDecomposition decompose_blocks(const GeneralizedDouble& d);

struct BlockCheck {
  bool partition = true;             // index sets partition the basis
  bool cross_orbit_zero = true;      // D(O_s) D(O_t) = 0 for distinct orbits
  bool stabilizer_closed = true;     // S(s) S(s) in S(s)
  bool point_kills_nilpotent = true; // D(s) N(s) = 0
  bool nilpotent_square_zero = true; // N(s) N(s) = 0
  bool block_identity = true;        // sum_{t in O_s} d_{1,t} is the identity of D(O_s)
  bool two_sided_ideal = true;       // A D(O_s) + D(O_s) A in D(O_s)
  std::string violation;

  bool all() const {
    return partition && cross_orbit_zero && stabilizer_closed && point_kills_nilpotent && nilpotent_square_zero &&
           block_identity && two_sided_ideal;
  }
};

/// Exhaustive exact verification of the subspace relations on basis products.
BlockCheck verify_blocks(const GeneralizedDouble& d, const BlockDecomposition& blocks);

/// rho(a (x) e(s)) = a identifies S(s) with C^{alpha_s}[G_s].
struct StabilizerIso {
  RestrictedCocycle restricted;  // G_s re-indexed, with alpha_s on it
  std::vector<int> double_index; // local a -> index of a (x) e(s)
  bool multiplicative = false;   // checked on all pairs of G_s
};

StabilizerIso stabilizer_subalgebra_iso(const GeneralizedDouble& d, int s);

struct DoubleCenter {
  std::vector<DoubleElement> elements;
  /// "formula" when every orbit used the Z(L_t) sums, "kernel" otherwise.
  std::string path;
  std::vector<int> orbit_counts;           // center elements per orbit
  std::vector<bool> orbit_used_formula;    // per orbit
  std::vector<std::string> warnings;       // COMPATIBILITY_FAILED notes
};

/// Normality of alpha_s on G_s and the Z(L_t) compatibility condition
///   alpha_{s g_i}(g_j^{-1} h g_i, g_i^{-1} a g_i) = alpha_{s g_i}(g_j^{-1} h a h^{-1} g_j, g_j^{-1} h g_i)
/// for all transversal indices i, j, h in G_s and alpha_s-regular a.
bool zlt_compatible(const GeneralizedDouble& d, const OrbitBlock& block);

/// Z(L_t) = sum_{a in L_t} sum_i g_i^{-1} a g_i (x) e(s g_i) per regular class,
/// falling back to the kernel method on orbits failing zlt_compatible.
DoubleCenter double_center_basis(const GeneralizedDouble& d);

/// Exact basis of {x : x b = b x} over the algebra generators.
std::vector<DoubleElement> center_by_kernel(const GeneralizedDouble& d);

/// Exact kernel of the commutation system for any monomial algebra.
std::vector<std::vector<Cyc>> center_from_structure(const StructureConstants& a);

bool is_central(const DoubleElement& x);

/// Dimension of the span of the given vectors, exact.
int span_dimension(const std::vector<std::vector<Cyc>>& vectors, int length);

}  // namespace tdouble
