#include "tdouble/module.hpp"

#include <map>
#include <random>

#include "tdouble/error.hpp"

namespace tdouble {

namespace {

std::string pair_text(int i, int j) { return "(" + std::to_string(i) + "," + std::to_string(j) + ")"; }

}  // namespace

ModuleCheck verify_module(const ExactModule& m, const StructureConstants& a) {
  if (static_cast<int>(m.action.size()) != a.dim) return {false, "module has wrong number of action matrices"};
  for (const auto& x : m.action) {
    if (x.rows() != m.dim || x.cols() != m.dim) return {false, "action matrix has wrong shape"};
  }
  if (act_sum(m, a.identity) != CycMatrix::identity(m.dim)) return {false, "identity does not act as 1"};
  for (int i = 0; i < a.dim; ++i) {
    for (int j = 0; j < a.dim; ++j) {
      const CycMatrix lhs = m.action[i] * m.action[j];
      const int k = a.target(i, j);
      if (k < 0) {
        if (!lhs.is_zero()) return {false, "product of basis pair " + pair_text(i, j) + " should act as 0"};
      } else if (lhs != m.action[k] * a.coeff(i, j)) {
        return {false, "action fails on basis pair " + pair_text(i, j)};
      }
    }
  }
  return {};
}

ModuleCheck verify_module(const NumericModule& m, const StructureConstants& a, double tolerance) {
  if (static_cast<int>(m.action.size()) != a.dim) return {false, "module has wrong number of action matrices"};
  const Eigen::MatrixXcd id = act_sum(m, a.identity);
  if ((id - Eigen::MatrixXcd::Identity(m.dim, m.dim)).norm() > tolerance * std::max(1, m.dim)) {
    return {false, "identity does not act as 1"};
  }
  for (int i = 0; i < a.dim; ++i) {
    for (int j = 0; j < a.dim; ++j) {
      Eigen::MatrixXcd diff = m.action[i] * m.action[j];
      const int k = a.target(i, j);
      if (k >= 0) diff -= a.coeff(i, j).to_complex() * m.action[k];
      if (diff.norm() > tolerance * std::max(1, m.dim)) {
        return {false, "action fails on basis pair " + pair_text(i, j)};
      }
    }
  }
  return {};
}

NumericModule to_numeric(const ExactModule& m) {
  NumericModule out{m.dim, {}};
  out.action.reserve(m.action.size());
  for (const auto& x : m.action) out.action.push_back(x.to_complex());
  return out;
}

CycMatrix act_sum(const ExactModule& m, const std::vector<int>& basis_sum) {
  CycMatrix out(m.dim, m.dim);
  for (int b : basis_sum) out += m.action[b];
  return out;
}

Eigen::MatrixXcd act_sum(const NumericModule& m, const std::vector<int>& basis_sum) {
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(m.dim, m.dim);
  for (int b : basis_sum) out += m.action[b];
  return out;
}

std::vector<CycMatrix> generator_images(const ExactModule& m, const StructureConstants& a) {
  std::vector<CycMatrix> out;
  for (const auto& g : a.generators) out.push_back(act_sum(m, g));
  return out;
}

std::vector<Eigen::MatrixXcd> generator_images(const NumericModule& m, const StructureConstants& a) {
  std::vector<Eigen::MatrixXcd> out;
  for (const auto& g : a.generators) out.push_back(act_sum(m, g));
  return out;
}

std::vector<CycMatrix> intertwiners(const std::vector<CycMatrix>& from, const std::vector<CycMatrix>& to,
                                    int from_dim, int to_dim) {
  if (from.size() != to.size()) throw Error(ErrorCode::MismatchedAlgebra, "generator lists differ in length");
  const int unknowns = from_dim * to_dim;
  auto var = [&](int r, int c) { return r * from_dim + c; };
  RowReducer reducer(unknowns);
  for (std::size_t k = 0; k < from.size(); ++k) {
    for (int r = 0; r < to_dim; ++r) {
      for (int c = 0; c < from_dim; ++c) {
        // (to X - X from)(r, c) = 0
        std::map<int, Cyc> row;
        for (int j = 0; j < to_dim; ++j) {
          if (!to[k](r, j).is_zero()) row[var(j, c)] += to[k](r, j);
        }
        for (int j = 0; j < from_dim; ++j) {
          if (!from[k](j, c).is_zero()) row[var(r, j)] -= from[k](j, c);
        }
        SparseRow sparse;
        for (auto& [col, v] : row) {
          if (!v.is_zero()) sparse.emplace_back(col, v);
        }
        if (!sparse.empty()) reducer.add_row(sparse);
      }
    }
  }
  std::vector<CycMatrix> out;
  for (const auto& v : reducer.nullspace()) {
    CycMatrix x(to_dim, from_dim);
    for (int r = 0; r < to_dim; ++r) {
      for (int c = 0; c < from_dim; ++c) x(r, c) = v[var(r, c)];
    }
    out.push_back(std::move(x));
  }
  return out;
}

std::vector<Eigen::MatrixXcd> intertwiners(const std::vector<Eigen::MatrixXcd>& from,
                                           const std::vector<Eigen::MatrixXcd>& to, int from_dim, int to_dim,
                                           double tolerance) {
  if (from.size() != to.size()) throw Error(ErrorCode::MismatchedAlgebra, "generator lists differ in length");
  const int unknowns = from_dim * to_dim;
  std::vector<Eigen::MatrixXcd> out;
  if (unknowns == 0) return out;
  auto var = [&](int r, int c) { return r * from_dim + c; };
  Eigen::MatrixXcd gram = Eigen::MatrixXcd::Zero(unknowns, unknowns);
  Eigen::MatrixXcd eq(unknowns, unknowns);
  for (std::size_t k = 0; k < from.size(); ++k) {
    eq.setZero();
    for (int r = 0; r < to_dim; ++r) {
      for (int c = 0; c < from_dim; ++c) {
        const int row = var(r, c);
        for (int j = 0; j < to_dim; ++j) eq(row, var(j, c)) += to[k](r, j);
        for (int j = 0; j < from_dim; ++j) eq(row, var(r, j)) -= from[k](j, c);
      }
    }
    gram.noalias() += eq.adjoint() * eq;
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(gram);
  const auto& values = solver.eigenvalues();
  const double scale = std::max(1.0, values.cwiseAbs().maxCoeff());
  const double threshold = std::max(tolerance, 1e-8) * scale;
  for (int i = 0; i < unknowns; ++i) {
    if (values(i) > threshold) continue;
    Eigen::MatrixXcd x(to_dim, from_dim);
    for (int r = 0; r < to_dim; ++r) {
      for (int c = 0; c < from_dim; ++c) x(r, c) = solver.eigenvectors()(var(r, c), i);
    }
    out.push_back(std::move(x));
  }
  return out;
}

std::vector<CycMatrix> hom_exact(const ExactModule& from, const ExactModule& to, const StructureConstants& a) {
  return intertwiners(generator_images(from, a), generator_images(to, a), from.dim, to.dim);
}

std::vector<Eigen::MatrixXcd> hom_numeric(const NumericModule& from, const NumericModule& to,
                                          const StructureConstants& a, double tolerance) {
  return intertwiners(generator_images(from, a), generator_images(to, a), from.dim, to.dim, tolerance);
}

std::optional<CycMatrix> find_isomorphism(const ExactModule& from, const ExactModule& to,
                                          const StructureConstants& a, std::uint64_t seed) {
  if (from.dim != to.dim) return std::nullopt;
  if (from.dim == 0) return CycMatrix(0, 0);
  const auto basis = hom_exact(from, to, a);
  if (basis.empty()) return std::nullopt;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> coeff(1, 9);
  for (int attempt = 0; attempt < 12; ++attempt) {
    CycMatrix x(to.dim, from.dim);
    for (std::size_t i = 0; i < basis.size(); ++i) {
      const long c = (attempt == 0 && basis.size() == 1) ? 1 : coeff(rng);
      x += basis[i] * Cyc(c);
    }
    if (rank(x) == from.dim) return x;
  }
  return std::nullopt;
}

bool is_intertwiner(const CycMatrix& x, const ExactModule& from, const ExactModule& to) {
  if (from.action.size() != to.action.size()) return false;
  for (std::size_t b = 0; b < from.action.size(); ++b) {
    if (x * from.action[b] != to.action[b] * x) return false;
  }
  return true;
}

}  // namespace tdouble
