#pragma once

#include <cstdint>
#include <vector>

#include "tdouble/double.hpp"
#include "tdouble/module.hpp"
#include "tdouble/twisted_algebra.hpp"

namespace tdouble {

constexpr double kDefaultTolerance = 1e-9;

/// One nonzero block of an induced action: d_{b,t} sends the summand
/// d_{g_i^{-1},s} (x) M to d_{g_j^{-1},s} (x) M through coefficient * rho_M(a).
struct InducedBlock {
  int from = 0;   // i
  int to = 0;     // j
  int local = 0;  // a in G_s, local index
  Cyc coefficient;
};

/// For every double basis element, its block (absent when it acts by zero).
/// Uses d_{g^{-1}a,s} = alpha_s(g^{-1},a)^{-1} d_{g^{-1},s} d_{a,s}.
std::vector<std::vector<InducedBlock>> induction_pattern(const GeneralizedDouble& d, int s);

/// D(s) (x)_{S(s)} M for a module M over C^{alpha_s}[G_s] (local indices of
/// the stabilizer). Throws InvalidModule when M fails the module axioms.
ExactModule induce(const GeneralizedDouble& d, int s, const ExactModule& m);
NumericModule induce(const GeneralizedDouble& d, int s, const NumericModule& m, double tolerance = kDefaultTolerance);

struct Restriction {
  ExactModule module;  // over C^{alpha_s}[G_s], local indices
  CycMatrix embed;     // dim N x r, columns span d_{1,s} N
  CycMatrix project;   // r x dim N, project * embed = 1, kills ker d_{1,s}
};

/// N |-> d_{1,s} N with the action of d_{a,s}, a in G_s.
Restriction restrict_by_idempotent(const GeneralizedDouble& d, int s, const ExactModule& n);

/// The unit M -> d_{1,s} Ind(M), m |-> d_{1,s} (x) m, in the coordinates of
/// r = restrict_by_idempotent(d, s, induce(d, s, m)).
CycMatrix induction_unit(const Restriction& r, int module_dim);

/// The map D(s) (x) d_{1,s}N -> N, d_{g_i^{-1},s} (x) n |-> d_{g_i^{-1},s} n,
/// as a matrix from induce(restriction.module) to n.
CycMatrix induction_counit(const GeneralizedDouble& d, int s, const Restriction& r, const ExactModule& n);

struct SimpleClassification {
  std::vector<int> dims;  // ascending
  std::vector<NumericModule> modules;
  int attempts = 0;
};

/// Wedderburn splitting of C^alpha[G]: central characters from a random
/// hermitian central element, then one minimal left ideal per block from a
/// random self-adjoint right multiplication. Throws IllConditioned after 5
/// failed attempts.
SimpleClassification classify_simples(const TwistedGroupAlgebra& a, double tolerance = kDefaultTolerance,
                                      std::uint64_t seed = 1);

struct OrbitSimples {
  int representative = 0;
  int stabilizer_order = 0;
  int index = 0;                      // [G : G_s]
  std::vector<int> stabilizer_dims;   // simples of C^{alpha_s}[G_s]
  std::vector<int> dims;              // induced dimensions index * d
  std::vector<NumericModule> modules; // induced simples over the whole double
  std::vector<int> endomorphism_dims; // 1 for every simple
  bool pairwise_inequivalent = true;
};

struct SimpleModuleReport {
  std::vector<OrbitSimples> orbits;
  long accounting = 0;  // sum of (index * d)^2
  int algebra_dim = 0;
  bool accounting_ok() const { return accounting == algebra_dim; }
  bool all_simple() const;
};

SimpleModuleReport classify_double_simples(const GeneralizedDouble& d, double tolerance = kDefaultTolerance,
                                           std::uint64_t seed = 1);

}  // namespace tdouble
