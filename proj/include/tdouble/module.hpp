#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "tdouble/exact_linalg.hpp"

namespace tdouble {

/// Multiplication data of an algebra whose basis products are monomial:
/// b_i b_j = coefficient * b_k, or zero when product is -1.
/// Both twisted group algebras and generalized doubles have this shape.
struct StructureConstants {
  int dim = 0;
  std::vector<int> product;      // dim * dim
  std::vector<Cyc> coefficient;  // dim * dim
  /// The identity as a sum of basis elements.
  std::vector<int> identity;
  /// Algebra generators, each a sum of basis elements.
  std::vector<std::vector<int>> generators;

  int target(int i, int j) const { return product[static_cast<std::size_t>(i) * dim + j]; }
  const Cyc& coeff(int i, int j) const { return coefficient[static_cast<std::size_t>(i) * dim + j]; }
};

/// A left module given by one action matrix per algebra basis element.
template <class Matrix>
struct MatrixModule {
  int dim = 0;
  std::vector<Matrix> action;
};

using ExactModule = MatrixModule<CycMatrix>;
using NumericModule = MatrixModule<Eigen::MatrixXcd>;

struct ModuleCheck {
  bool valid = true;
  std::string violation;
};

/// rho(b_i) rho(b_j) = c rho(b_k) on all pairs and the identity acts as 1, exactly.
ModuleCheck verify_module(const ExactModule& m, const StructureConstants& a);
ModuleCheck verify_module(const NumericModule& m, const StructureConstants& a, double tolerance);

NumericModule to_numeric(const ExactModule& m);

/// Action of a sum of basis elements.
CycMatrix act_sum(const ExactModule& m, const std::vector<int>& basis_sum);
Eigen::MatrixXcd act_sum(const NumericModule& m, const std::vector<int>& basis_sum);

std::vector<CycMatrix> generator_images(const ExactModule& m, const StructureConstants& a);
std::vector<Eigen::MatrixXcd> generator_images(const NumericModule& m, const StructureConstants& a);

/// Basis of {X : to[k] X = X from[k] for all k}, exact. X has shape to_dim x from_dim.
std::vector<CycMatrix> intertwiners(const std::vector<CycMatrix>& from, const std::vector<CycMatrix>& to,
                                    int from_dim, int to_dim);
/// Orthonormal basis of the same space, numerically: the null eigenvectors of
/// the Gram operator sum_k M_k^* M_k.
std::vector<Eigen::MatrixXcd> intertwiners(const std::vector<Eigen::MatrixXcd>& from,
                                           const std::vector<Eigen::MatrixXcd>& to, int from_dim, int to_dim,
                                           double tolerance);

/// Hom_A(from, to) over the algebra's generating set.
std::vector<CycMatrix> hom_exact(const ExactModule& from, const ExactModule& to, const StructureConstants& a);
std::vector<Eigen::MatrixXcd> hom_numeric(const NumericModule& from, const NumericModule& to,
                                          const StructureConstants& a, double tolerance);

/// An invertible intertwiner from -> to, or nullopt when the modules are not
/// isomorphic. Tries seeded integer combinations of a Hom basis.
std::optional<CycMatrix> find_isomorphism(const ExactModule& from, const ExactModule& to,
                                          const StructureConstants& a, std::uint64_t seed = 1);

/// X rho_from(b) = rho_to(b) X for every basis element b, exactly.
bool is_intertwiner(const CycMatrix& x, const ExactModule& from, const ExactModule& to);

}  // namespace tdouble
