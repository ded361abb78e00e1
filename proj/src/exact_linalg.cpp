#include "tdouble/exact_linalg.hpp"

#include "tdouble/error.hpp"

namespace tdouble {

CycMatrix CycMatrix::identity(int n) {
  CycMatrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = Cyc(1);
  return m;
}

bool CycMatrix::is_zero() const {
  for (const auto& x : data_) {
    if (!x.is_zero()) return false;
  }
  return true;
}

CycMatrix CycMatrix::transpose() const {
  CycMatrix t(cols_, rows_);
  for (int r = 0; r < rows_; ++r) {
    for (int c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  }
  return t;
}

CycMatrix CycMatrix::adjoint() const {
  CycMatrix t(cols_, rows_);
  for (int r = 0; r < rows_; ++r) {
    for (int c = 0; c < cols_; ++c) {
      if (!(*this)(r, c).is_zero()) t(c, r) = (*this)(r, c).conj();
    }
  }
  return t;
}

CycMatrix CycMatrix::block(int r0, int c0, int rows, int cols) const {
  CycMatrix b(rows, cols);
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) b(r, c) = (*this)(r0 + r, c0 + c);
  }
  return b;
}

void CycMatrix::set_block(int r0, int c0, const CycMatrix& src, const Cyc& scale) {
  const bool unit = scale.is_one();
  for (int r = 0; r < src.rows(); ++r) {
    for (int c = 0; c < src.cols(); ++c) {
      const Cyc& v = src(r, c);
      if (v.is_zero()) {
        (*this)(r0 + r, c0 + c) = Cyc();
      } else {
        (*this)(r0 + r, c0 + c) = unit ? v : v * scale;
      }
    }
  }
}

Eigen::MatrixXcd CycMatrix::to_complex() const {
  Eigen::MatrixXcd m(rows_, cols_);
  for (int r = 0; r < rows_; ++r) {
    for (int c = 0; c < cols_; ++c) m(r, c) = (*this)(r, c).to_complex();
  }
  return m;
}

CycMatrix& CycMatrix::operator+=(const CycMatrix& other) {
  for (std::size_t i = 0; i < data_.size(); ++i) {
    if (!other.data_[i].is_zero()) data_[i] += other.data_[i];
  }
  return *this;
}

CycMatrix& CycMatrix::operator-=(const CycMatrix& other) {
  for (std::size_t i = 0; i < data_.size(); ++i) {
    if (!other.data_[i].is_zero()) data_[i] -= other.data_[i];
  }
  return *this;
}

CycMatrix& CycMatrix::operator*=(const Cyc& s) {
  for (auto& x : data_) {
    if (!x.is_zero()) x *= s;
  }
  return *this;
}

CycMatrix operator*(const CycMatrix& a, const CycMatrix& b) {
  if (a.cols() != b.rows()) throw Error(ErrorCode::Unsupported, "matrix dimension mismatch");
  CycMatrix out(a.rows(), b.cols());
  for (int r = 0; r < a.rows(); ++r) {
    for (int k = 0; k < a.cols(); ++k) {
      const Cyc& x = a(r, k);
      if (x.is_zero()) continue;
      for (int c = 0; c < b.cols(); ++c) {
        const Cyc& y = b(k, c);
        if (!y.is_zero()) out(r, c) += x * y;
      }
    }
  }
  return out;
}

bool operator==(const CycMatrix& a, const CycMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (std::size_t i = 0; i < a.data_.size(); ++i) {
    if (a.data_[i] != b.data_[i]) return false;
  }
  return true;
}

// ----------------------------------------------------------------- RowReducer

bool RowReducer::add_row(const SparseRow& row) {
  std::map<int, Cyc> w;
  for (const auto& [c, v] : row) {
    if (c < 0 || c >= cols_) throw Error(ErrorCode::Unsupported, "row column out of range");
    if (!v.is_zero()) w[c] += v;
  }
  auto it = w.begin();
  while (it != w.end()) {
    if (it->second.is_zero()) {
      it = w.erase(it);
      continue;
    }
    auto p = pivot_row_.find(it->first);
    if (p == pivot_row_.end()) {
      ++it;
      continue;
    }
    const Cyc factor = it->second;
    const auto& prow = rows_[p->second];
    for (auto pc = std::next(prow.begin()); pc != prow.end(); ++pc) w[pc->first] -= factor * pc->second;
    it = w.erase(it);
  }
  for (auto i = w.begin(); i != w.end();) {
    i = i->second.is_zero() ? w.erase(i) : std::next(i);
  }
  if (w.empty()) return false;
  const Cyc lead_inv = w.begin()->second.inverse();
  for (auto& [c, v] : w) v *= lead_inv;
  pivot_row_[w.begin()->first] = static_cast<int>(rows_.size());
  rows_.push_back(std::move(w));
  reduced_ = false;
  return true;
}

bool RowReducer::add_dense_row(const std::vector<Cyc>& row) {
  SparseRow sparse;
  for (std::size_t c = 0; c < row.size(); ++c) {
    if (!row[c].is_zero()) sparse.emplace_back(static_cast<int>(c), row[c]);
  }
  return add_row(sparse);
}

void RowReducer::fully_reduce() {
  if (reduced_) return;
  // Walk pivots from the rightmost leading column down; rows to the right are
  // already fully reduced when a row is processed.
  for (auto p = pivot_row_.rbegin(); p != pivot_row_.rend(); ++p) {
    auto& row = rows_[p->second];
    auto it = std::next(row.begin());
    while (it != row.end()) {
      auto q = pivot_row_.find(it->first);
      if (q == pivot_row_.end() || it->second.is_zero()) {
        it = it->second.is_zero() ? row.erase(it) : std::next(it);
        continue;
      }
      const Cyc factor = it->second;
      const int col = it->first;
      const auto& qrow = rows_[q->second];
      for (auto qc = std::next(qrow.begin()); qc != qrow.end(); ++qc) row[qc->first] -= factor * qc->second;
      row.erase(col);
      it = row.upper_bound(col);
    }
  }
  reduced_ = true;
}

std::vector<std::vector<Cyc>> RowReducer::nullspace() {
  fully_reduce();
  std::vector<std::vector<Cyc>> basis;
  for (int f = 0; f < cols_; ++f) {
    if (pivot_row_.count(f)) continue;
    std::vector<Cyc> v(cols_);
    v[f] = Cyc(1);
    for (const auto& [lead, idx] : pivot_row_) {
      auto e = rows_[idx].find(f);
      if (e != rows_[idx].end() && !e->second.is_zero()) v[lead] = -e->second;
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<int> RowReducer::pivot_columns() const {
  std::vector<int> cols;
  for (const auto& [lead, idx] : pivot_row_) cols.push_back(lead);
  return cols;
}

std::optional<std::vector<Cyc>> RowReducer::particular_solution(int rhs) {
  fully_reduce();
  if (pivot_row_.count(rhs)) return std::nullopt;
  std::vector<Cyc> x(rhs);
  for (const auto& [lead, idx] : pivot_row_) {
    if (lead > rhs) continue;
    auto e = rows_[idx].find(rhs);
    if (e != rows_[idx].end()) x[lead] = e->second;
  }
  return x;
}

std::vector<Cyc> RowReducer::reduced_row(int lead) {
  fully_reduce();
  std::vector<Cyc> out(cols_);
  for (const auto& [c, v] : rows_.at(pivot_row_.at(lead))) out[c] = v;
  return out;
}

// ------------------------------------------------------------ dense helpers

namespace {

RowReducer reduce_rows(const CycMatrix& m, int extra_cols = 0) {
  RowReducer r(m.cols() + extra_cols);
  for (int i = 0; i < m.rows(); ++i) {
    SparseRow row;
    for (int c = 0; c < m.cols(); ++c) {
      if (!m(i, c).is_zero()) row.emplace_back(c, m(i, c));
    }
    r.add_row(row);
  }
  return r;
}

}  // namespace

int rank(const CycMatrix& m) { return reduce_rows(m).rank(); }

CycMatrix nullspace(const CycMatrix& m) {
  RowReducer r = reduce_rows(m);
  const auto basis = r.nullspace();
  CycMatrix out(m.cols(), static_cast<int>(basis.size()));
  for (std::size_t j = 0; j < basis.size(); ++j) {
    for (int i = 0; i < m.cols(); ++i) out(i, static_cast<int>(j)) = basis[j][i];
  }
  return out;
}

std::vector<int> independent_columns(const CycMatrix& m) { return reduce_rows(m).pivot_columns(); }

CycMatrix inverse(const CycMatrix& m) {
  if (m.rows() != m.cols()) throw Error(ErrorCode::Unsupported, "inverse of a non-square matrix");
  const int n = m.rows();
  RowReducer r(2 * n);
  for (int i = 0; i < n; ++i) {
    SparseRow row;
    for (int c = 0; c < n; ++c) {
      if (!m(i, c).is_zero()) row.emplace_back(c, m(i, c));
    }
    row.emplace_back(n + i, Cyc(1));
    r.add_row(row);
  }
  const auto pivots = r.pivot_columns();
  if (static_cast<int>(pivots.size()) != n || (n > 0 && pivots.back() >= n)) {
    throw Error(ErrorCode::DivisionByZero, "matrix is singular");
  }
  CycMatrix inv(n, n);
  for (int i = 0; i < n; ++i) {
    const auto row = r.reduced_row(i);
    for (int j = 0; j < n; ++j) inv(i, j) = row[n + j];
  }
  return inv;
}

std::optional<std::vector<Cyc>> solve(const CycMatrix& a, const std::vector<Cyc>& b) {
  RowReducer r(a.cols() + 1);
  for (int i = 0; i < a.rows(); ++i) {
    SparseRow row;
    for (int c = 0; c < a.cols(); ++c) {
      if (!a(i, c).is_zero()) row.emplace_back(c, a(i, c));
    }
    if (!b[i].is_zero()) row.emplace_back(a.cols(), b[i]);
    r.add_row(row);
  }
  return r.particular_solution(a.cols());
}

}  // namespace tdouble
