#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tdouble/cyclotomic.hpp"
#include "tdouble/group.hpp"

namespace tdouble {

/// A map lambda: G -> mu_N with lambda(1) = 1, stored as exponents.
struct Coboundary {
  int conductor = 1;
  std::vector<long> exponents;  // indexed by element

  static Coboundary trivial(const FiniteGroup& group, int conductor = 1);
  RootOfUnity value(Element g) const { return RootOfUnity(conductor, exponents[g]); }
  Coboundary inverse() const;
};

/// Componentwise lambda_s: G -> mu_N for every point s of a G-set.
struct SetCoboundary {
  int conductor = 1;
  int order = 0;
  std::vector<long> exponents;  // index s * |G| + g

  static SetCoboundary trivial(int set_size, const FiniteGroup& group, int conductor = 1);
  RootOfUnity value(int s, Element g) const {
    return RootOfUnity(conductor, exponents[static_cast<std::size_t>(s) * order + g]);
  }
  SetCoboundary inverse() const;
};

/// A tabulated 2-cocycle alpha: G x G -> mu_N, alpha(x, y) = zeta_N^k.
///
/// Values are stored as exponents modulo the conductor. Construction does
/// not validate; call validate_cocycle.
class TwoCocycle {
 public:
  TwoCocycle() = default;
  TwoCocycle(GroupPtr group, int conductor);
  TwoCocycle(GroupPtr group, int conductor, std::vector<long> exponents);

  static TwoCocycle trivial(GroupPtr group);

  const GroupPtr& group() const { return group_; }
  int conductor() const { return conductor_; }
  long exponent(Element x, Element y) const { return exps_[index(x, y)]; }
  RootOfUnity value(Element x, Element y) const { return RootOfUnity(conductor_, exps_[index(x, y)]); }
  void set_exponent(Element x, Element y, long k);
  const std::vector<long>& exponents() const { return exps_; }

  /// Same values over a multiple of the conductor.
  TwoCocycle promoted(int conductor) const;

  friend bool operator==(const TwoCocycle& a, const TwoCocycle& b);

 private:
  std::size_t index(Element x, Element y) const { return static_cast<std::size_t>(x) * group_->order() + y; }

  GroupPtr group_;
  int conductor_ = 1;
  std::vector<long> exps_;
};

/// alpha: G x G -> U(CS), stored as the components alpha_s for every point s.
class SetCocycle {
 public:
  SetCocycle() = default;
  SetCocycle(GroupPtr group, GSetPtr gset, int conductor);

  /// alpha_s = alpha for every s.
  static SetCocycle constant(GSetPtr gset, const TwoCocycle& alpha);
  static SetCocycle trivial(GroupPtr group, GSetPtr gset);

  const GroupPtr& group() const { return group_; }
  const GSetPtr& gset() const { return gset_; }
  int conductor() const { return conductor_; }
  long exponent(int s, Element x, Element y) const { return exps_[index(s, x, y)]; }
  RootOfUnity value(int s, Element x, Element y) const { return RootOfUnity(conductor_, exps_[index(s, x, y)]); }
  void set_exponent(int s, Element x, Element y, long k);
  /// The scalar cocycle alpha_s on all of G (valid only when s is a fixed point).
  TwoCocycle component(int s) const;

  SetCocycle promoted(int conductor) const;

  friend bool operator==(const SetCocycle& a, const SetCocycle& b);

 private:
  std::size_t index(int s, Element x, Element y) const {
    const std::size_t n = group_->order();
    return (static_cast<std::size_t>(s) * n + x) * n + y;
  }

  GroupPtr group_;
  GSetPtr gset_;
  int conductor_ = 1;
  std::vector<long> exps_;
};

struct CocycleCheck {
  bool valid = true;
  std::string violation;  // empty when valid
};

/// Exhaustive normalization and cocycle-law check.
CocycleCheck validate_cocycle(const TwoCocycle& alpha);
/// Exhaustive check of alpha_s(hk,l) alpha_{s.l^-1}(h,k) = alpha_s(h,kl) alpha_s(k,l).
CocycleCheck validate_cocycle(const SetCocycle& alpha);

/// alpha(x,y) lambda(x) lambda(y) lambda(xy)^{-1}.
TwoCocycle apply_coboundary(const TwoCocycle& alpha, const Coboundary& lambda);
/// beta_s(x,y) = alpha_s(x,y) lambda_{s.y^-1}(x) lambda_s(xy)^{-1} lambda_s(y).
SetCocycle apply_coboundary(const SetCocycle& alpha, const SetCoboundary& lambda);

/// alpha(g,x) = alpha(x,g) for every x in the centralizer of g.
bool is_alpha_regular(const TwoCocycle& alpha, Element g);

struct RegularClasses {
  std::vector<ConjugacyClass> classes;
  /// False if some class has members that disagree on regularity.
  bool class_consistent = true;
  std::string violation;
};

RegularClasses alpha_regular_classes(const TwoCocycle& alpha);

/// alpha(x,g) = alpha(xgx^{-1},x) for all x and all alpha-regular g.
bool is_normal_cocycle(const TwoCocycle& alpha);

struct NormalizedCocycle {
  TwoCocycle normal;
  Coboundary lambda;  // normal == apply_coboundary(alpha, lambda)
};

/// Rescale each basis vector of a regular class so that conjugation by the
/// basis permutes the class without scalars. Representatives are the
/// smallest index in each class; transversals are greedy.
NormalizedCocycle normalize_cocycle(const TwoCocycle& alpha);

struct RestrictedCocycle {
  Subgroup stabilizer;
  TwoCocycle cocycle;  // on stabilizer.group
};

/// Restriction of alpha_s to the stabilizer G_s, re-indexed on the subgroup.
RestrictedCocycle restrict_cocycle(const SetCocycle& alpha, int s);

/// Find lambda: G -> mu_N with apply_coboundary(alpha, lambda) == beta, where
/// N is the given conductor (the lcm with both inputs' conductors is used).
/// Decides mu_N-cohomology; nullopt means NOT_COHOMOLOGOUS over mu_N.
std::optional<Coboundary> solve_coboundary(const TwoCocycle& alpha, const TwoCocycle& beta, int conductor);

/// Pull back along a homomorphism phi: H -> G given as an element map.
TwoCocycle inflate(GroupPtr source, const std::vector<Element>& phi, const TwoCocycle& alpha);

}  // namespace tdouble
