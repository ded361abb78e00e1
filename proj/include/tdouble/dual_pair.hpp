#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "tdouble/cocycle.hpp"
#include "tdouble/double.hpp"
#include "tdouble/module.hpp"
#include "tdouble/rep_decomp.hpp"

namespace tdouble {

/// A family of spaces M_s indexed by the points of a right G-set, with maps
/// phi_s(x): M_s -> M_{s.x^{-1}} such that
///   phi_{s.x^{-1}}(y) phi_s(x) = alpha_s(y,x) phi_s(yx),  phi_s(1) = 1.
/// Entries are exact when `exact` is filled; `numeric` is always filled.
struct StableFamily {
  GroupPtr group;
  GSetPtr labels_action;
  std::vector<std::string> labels;
  std::vector<int> dims;
  std::vector<std::vector<int>> levels;  // per label; sums to dims[s]
  std::vector<std::vector<CycMatrix>> exact;  // [s][x], empty when numeric only
  std::vector<std::vector<Eigen::MatrixXcd>> numeric;

  int size() const { return static_cast<int>(dims.size()); }
  bool is_exact() const { return !exact.empty(); }
  int total_dim() const;
  /// Offset of M_s inside the direct sum, in label order.
  int offset(int s) const;
  int level_count() const;
  /// Coordinates of level n inside the direct sum.
  std::vector<int> level_coordinates(int n) const;

  /// Fill `numeric` from `exact`.
  void sync_numeric();
  /// Shapes, phi_s(1) = 1 and the label action; throws on failure.
  void check_shapes() const;
};

/// A projective action of G on one space: the family with a single point.
struct ProjectiveAction {
  GroupPtr group;
  int dim = 0;
  std::vector<int> levels;
  std::vector<CycMatrix> exact;  // empty when numeric only
  std::vector<Eigen::MatrixXcd> numeric;

  bool is_exact() const { return !exact.empty(); }
  StableFamily as_family() const;
};

/// alpha(y,x) from phi(y) phi(x) = alpha(y,x) phi(yx), read at an entry of
/// maximal modulus and verified on the whole matrix. Throws NOT_PROJECTIVE or
/// NOT_ROOT_OF_UNITY. The conductor is the least one holding every value.
TwoCocycle extract_cocycle(const ProjectiveAction& phi, double tolerance = kDefaultTolerance);

/// alpha = sum_s alpha_s e(s), validated as a set cocycle (throws InvalidCocycle).
SetCocycle build_set_cocycle(const StableFamily& f, double tolerance = kDefaultTolerance);

/// d_{a,t} w = delta_{t,s} phi_s(a) w for w in M_s, on the direct sum of all M_s.
ExactModule double_action(const StableFamily& f, const GeneralizedDouble& d);
NumericModule double_action_numeric(const StableFamily& f, const GeneralizedDouble& d);

/// The same action restricted to the orbit sum of M_s, summands in the order
/// of orbit_stabilizer(s).orbit.
ExactModule orbit_action(const StableFamily& f, const GeneralizedDouble& d, int s);

/// True when every action matrix maps each orbit sum into itself.
bool orbit_sums_invariant(const StableFamily& f, const NumericModule& m, double tolerance = kDefaultTolerance);

/// M_s as a module over C^{alpha_s}[G_s]: a |-> phi_s(a), local indices.
ExactModule stabilizer_module(const StableFamily& f, int s);

/// Psi: D(s) (x)_{S(s)} M_s -> sum of M over the orbit,
/// d_{g_i^{-1},s} (x) m |-> phi_s(g_i^{-1}) m, and its inverse chi built from
/// phi_s(g^{-1})^{-1} = alpha_s(g, g^{-1})^{-1} phi_{s.g}(g).
struct PsiIsomorphism {
  ExactModule induced;
  ExactModule orbit_module;
  CycMatrix psi;
  CycMatrix chi;
};

/// Requires an exact family; throws Unsupported otherwise.
PsiIsomorphism psi_isomorphism(const StableFamily& f, const GeneralizedDouble& d, int s);

/// Operators on the direct sum commuting with the double action and, when
/// respect_levels is set, preserving every level.
std::vector<Eigen::MatrixXcd> commutant(const StableFamily& f, const GeneralizedDouble& d, bool respect_levels,
                                        double tolerance = kDefaultTolerance);
std::vector<Eigen::MatrixXcd> commutant(const ProjectiveAction& phi, double tolerance = kDefaultTolerance);

struct MultiplicityEntry {
  int orbit = 0;          // index into the orbit list of the double
  int simple = 0;         // index within the orbit's simples
  int level = -1;         // -1 for the whole space
  int simple_dim = 0;     // dim W
  int multiplicity = 0;   // dim Hom_D(W, M)
  bool irreducible = false;  // commutant acts irreducibly on the multiplicity space
};

struct LevelDecomposition {
  int level = -1;  // -1 for the whole space
  int dim = 0;
  std::vector<MultiplicityEntry> entries;
  /// hom_dims[p][q] = dim of intertwiners between the commutant actions on
  /// the multiplicity spaces of entries p and q.
  std::vector<std::vector<int>> hom_dims;
  int commutant_dim = 0;
  long accounting = 0;         // sum dim W * multiplicity
  long commutant_expected = 0; // sum multiplicity^2

  bool all_irreducible() const;
  bool pairwise_inequivalent() const;
  bool accounting_ok() const { return accounting == dim; }
  bool commutant_ok() const { return commutant_dim == commutant_expected; }
};

struct DualPairReport {
  SimpleModuleReport simples;
  LevelDecomposition global;
  std::vector<LevelDecomposition> levels;
  std::vector<std::string> absent;  // simples with zero multiplicity

  bool ok() const;
};

DualPairReport dual_pair_decompose(const StableFamily& f, const GeneralizedDouble& d,
                                   double tolerance = kDefaultTolerance, std::uint64_t seed = 1);

/// The group B = G x U(CS) with (y,v)(x,u) = (yx, alpha(y,x) v^x u), where
/// (v^x)_N = v_{N.x^{-1}}. Units are roots of unity here.
struct BElement {
  Element x = 0;
  std::vector<RootOfUnity> u;  // one per label
};

BElement b_multiply(const SetCocycle& alpha, const BElement& y, const BElement& x);
/// (x,u) acts on M_N by u_N phi_N(x).
CycMatrix b_action(const StableFamily& f, const BElement& b);

}  // namespace tdouble
