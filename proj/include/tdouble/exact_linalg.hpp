#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "tdouble/cyclotomic.hpp"

namespace tdouble {

/// Dense matrix over Q(zeta_N), row-major.
class CycMatrix {
 public:
  CycMatrix() = default;
  CycMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols) {}

  static CycMatrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Cyc& operator()(int r, int c) { return data_[static_cast<std::size_t>(r) * cols_ + c]; }
  const Cyc& operator()(int r, int c) const { return data_[static_cast<std::size_t>(r) * cols_ + c]; }

  bool is_zero() const;
  CycMatrix transpose() const;
  /// Conjugate transpose.
  CycMatrix adjoint() const;
  CycMatrix block(int r0, int c0, int rows, int cols) const;
  void set_block(int r0, int c0, const CycMatrix& src, const Cyc& scale = Cyc(1));
  Eigen::MatrixXcd to_complex() const;

  CycMatrix& operator+=(const CycMatrix& other);
  CycMatrix& operator-=(const CycMatrix& other);
  CycMatrix& operator*=(const Cyc& s);
  friend CycMatrix operator+(CycMatrix a, const CycMatrix& b) { return a += b; }
  friend CycMatrix operator-(CycMatrix a, const CycMatrix& b) { return a -= b; }
  friend CycMatrix operator*(CycMatrix a, const Cyc& s) { return a *= s; }
  friend CycMatrix operator*(const Cyc& s, CycMatrix a) { return a *= s; }
  friend CycMatrix operator*(const CycMatrix& a, const CycMatrix& b);
  friend bool operator==(const CycMatrix& a, const CycMatrix& b);
  friend bool operator!=(const CycMatrix& a, const CycMatrix& b) { return !(a == b); }

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Cyc> data_;
};

using SparseRow = std::vector<std::pair<int, Cyc>>;

/// Incremental exact row reduction over Q(zeta_N) for sparse systems.
///
/// Rows are reduced against existing pivots as they arrive, so duplicate
/// equations cost one reduction and are then dropped.
class RowReducer {
 public:
  explicit RowReducer(int cols) : cols_(cols) {}

  /// Returns true when the row increased the rank.
  bool add_row(const SparseRow& row);
  bool add_dense_row(const std::vector<Cyc>& row);

  int cols() const { return cols_; }
  int rank() const { return static_cast<int>(rows_.size()); }
  /// Basis of {x : row . x = 0 for all rows}, one dense vector per free column.
  std::vector<std::vector<Cyc>> nullspace();
  /// Pivot column of each stored row, ascending.
  std::vector<int> pivot_columns() const;
  /// Treat column `rhs` as the right-hand side of an augmented system and
  /// return the solution with all free unknowns zero (length rhs).
  std::optional<std::vector<Cyc>> particular_solution(int rhs);
  /// Dense copy of the fully reduced row whose leading column is `lead`.
  std::vector<Cyc> reduced_row(int lead);

 private:
  void fully_reduce();

  int cols_;
  bool reduced_ = true;
  std::vector<std::map<int, Cyc>> rows_;  // leading coefficient 1
  std::map<int, int> pivot_row_;          // leading column -> row
};

int rank(const CycMatrix& m);
/// Right kernel basis as columns of the returned matrix.
CycMatrix nullspace(const CycMatrix& m);
/// Inverse of a square matrix; throws DivisionByZero when singular.
CycMatrix inverse(const CycMatrix& m);
/// Indices of a maximal set of linearly independent columns (greedy, ascending).
std::vector<int> independent_columns(const CycMatrix& m);
/// Solve A x = b for one solution; std::nullopt when inconsistent.
std::optional<std::vector<Cyc>> solve(const CycMatrix& a, const std::vector<Cyc>& b);

}  // namespace tdouble
