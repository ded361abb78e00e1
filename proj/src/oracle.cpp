#include "tdouble/oracle.hpp"

#include <cmath>
#include <map>
#include <numbers>

#include <Eigen/Dense>

namespace tdouble::oracle {

namespace {

using Cplx = std::complex<double>;

long md(long a, long n) { return ((a % n) + n) % n; }

Cplx phase(long k, int n) { return std::polar(1.0, 2 * std::numbers::pi * static_cast<double>(k) / n); }

long tw(const RawTwisted& a, int x, int y) { return a.exps[static_cast<std::size_t>(x) * a.order + y]; }

int prod(const RawTwisted& a, int x, int y) { return a.mul[static_cast<std::size_t>(x) * a.order + y]; }

}  // namespace

bool tga_associative(const RawTwisted& a) {
  const int n = a.order;
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      for (int z = 0; z < n; ++z) {
        // (x y) z and x (y z) land on the same element; compare scalars.
        const long left = tw(a, x, y) + tw(a, prod(a, x, y), z);
        const long right = tw(a, y, z) + tw(a, x, prod(a, y, z));
        if (prod(a, prod(a, x, y), z) != prod(a, x, prod(a, y, z))) return false;
        if (md(left - right, a.conductor) != 0) return false;
      }
    }
  }
  return true;
}

bool double_associative(const RawDouble& d) {
  const int n = d.order;
  const int m = d.set_size;
  auto mul = [&](int x, int y) { return d.mul[static_cast<std::size_t>(x) * n + y]; };
  auto act = [&](int s, int x) { return d.action[static_cast<std::size_t>(s) * n + x]; };
  auto ex = [&](int s, int x, int y) { return d.exps[(static_cast<std::size_t>(s) * n + x) * n + y]; };
  struct Term {
    bool zero;
    int g;
    int s;
    long k;
  };
  auto times = [&](const Term& a, const Term& b) -> Term {
    if (a.zero || b.zero || act(a.s, b.g) != b.s) return {true, 0, 0, 0};
    return {false, mul(a.g, b.g), b.s, a.k + b.k + ex(b.s, a.g, b.g)};
  };
  for (int g = 0; g < n; ++g) {
    for (int s = 0; s < m; ++s) {
      for (int h = 0; h < n; ++h) {
        for (int t = 0; t < m; ++t) {
          for (int l = 0; l < n; ++l) {
            for (int u = 0; u < m; ++u) {
              const Term a{false, g, s, 0}, b{false, h, t, 0}, c{false, l, u, 0};
              const Term left = times(times(a, b), c);
              const Term right = times(a, times(b, c));
              if (left.zero != right.zero) return false;
              if (left.zero) continue;
              if (left.g != right.g || left.s != right.s || md(left.k - right.k, d.conductor) != 0) return false;
            }
          }
        }
      }
    }
  }
  return true;
}

std::vector<bool> regular_elements(const RawTwisted& a) {
  const int n = a.order;
  std::vector<bool> out(n, true);
  for (int g = 0; g < n; ++g) {
    for (int x = 0; x < n; ++x) {
      if (prod(a, x, g) != prod(a, g, x)) continue;
      if (md(tw(a, g, x) - tw(a, x, g), a.conductor) != 0) out[g] = false;
    }
  }
  return out;
}

namespace {

// Class label of each element by conjugation orbits.
std::vector<int> class_labels(const RawTwisted& a) {
  const int n = a.order;
  int e = 0;
  for (int x = 0; x < n; ++x) {
    if (prod(a, x, 0) == 0 && prod(a, 0, x) == 0) {
      bool is_identity = true;
      for (int y = 0; y < n && is_identity; ++y) is_identity = prod(a, x, y) == y;
      if (is_identity) e = x;
    }
  }
  std::vector<int> inv(n);
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      if (prod(a, x, y) == e) inv[x] = y;
    }
  }
  std::vector<int> label(n, -1);
  int next = 0;
  for (int g = 0; g < n; ++g) {
    if (label[g] != -1) continue;
    for (int x = 0; x < n; ++x) label[prod(a, prod(a, x, g), inv[x])] = next;
    ++next;
  }
  return label;
}

}  // namespace

int regular_class_count(const RawTwisted& a) {
  const auto label = class_labels(a);
  const auto reg = regular_elements(a);
  std::vector<bool> seen(a.order, false);
  int count = 0;
  for (int g = 0; g < a.order; ++g) {
    if (reg[g] && !seen[label[g]]) {
      seen[label[g]] = true;
      ++count;
    }
  }
  return count;
}

bool regularity_is_class_function(const RawTwisted& a) {
  const auto label = class_labels(a);
  const auto reg = regular_elements(a);
  for (int g = 0; g < a.order; ++g) {
    for (int h = 0; h < a.order; ++h) {
      if (label[g] == label[h] && reg[g] != reg[h]) return false;
    }
  }
  return true;
}

int numeric_rank(const std::vector<SparseRow>& rows, int cols) {
  if (rows.empty() || cols == 0) return 0;
  // Rank of A from the Gram matrix A^* A; rows are sparse, so accumulate pairwise.
  Eigen::MatrixXcd gram = Eigen::MatrixXcd::Zero(cols, cols);
  for (const auto& row : rows) {
    for (const auto& [i, u] : row) {
      for (const auto& [j, v] : row) gram(i, j) += std::conj(u) * v;
    }
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(gram);
  const auto& ev = solver.eigenvalues();
  const double threshold = 1e-12 * std::max(1.0, ev.cwiseAbs().maxCoeff());
  int rank = 0;
  for (Eigen::Index i = 0; i < ev.size(); ++i) {
    if (ev(i) > threshold) ++rank;
  }
  return rank;
}

namespace {

void flush(std::map<int, std::map<int, Cplx>>& block, std::vector<SparseRow>& rows) {
  for (auto& [target, entries] : block) {
    SparseRow r;
    for (auto& [var, c] : entries) {
      if (std::abs(c) > 1e-12) r.emplace_back(var, c);
    }
    if (!r.empty()) rows.push_back(std::move(r));
  }
  block.clear();
}

}  // namespace

int center_dimension(const RawTwisted& a) {
  const int n = a.order;
  // For each basis y: coefficient of e_target in x-bar y-bar - y-bar x-bar, per unknown x.
  std::vector<SparseRow> rows;
  std::map<int, std::map<int, Cplx>> block;
  for (int y = 0; y < n; ++y) {
    for (int x = 0; x < n; ++x) {
      block[prod(a, x, y)][x] += phase(tw(a, x, y), a.conductor);
      block[prod(a, y, x)][x] -= phase(tw(a, y, x), a.conductor);
    }
    flush(block, rows);
  }
  return n - numeric_rank(rows, n);
}

int center_dimension(const RawDouble& d) {
  const int n = d.order;
  const int m = d.set_size;
  const int dim = n * m;
  auto mul = [&](int x, int y) { return d.mul[static_cast<std::size_t>(x) * n + y]; };
  auto act = [&](int s, int x) { return d.action[static_cast<std::size_t>(s) * n + x]; };
  auto ex = [&](int s, int x, int y) { return d.exps[(static_cast<std::size_t>(s) * n + x) * n + y]; };
  std::vector<SparseRow> rows;
  std::map<int, std::map<int, Cplx>> block;
  for (int h = 0; h < n; ++h) {
    for (int t = 0; t < m; ++t) {
      for (int g = 0; g < n; ++g) {
        for (int s = 0; s < m; ++s) {
          const int var = g * m + s;
          if (act(s, h) == t) block[mul(g, h) * m + t][var] += phase(ex(t, g, h), d.conductor);
          if (act(t, g) == s) block[mul(h, g) * m + s][var] -= phase(ex(s, h, g), d.conductor);
        }
      }
      flush(block, rows);
    }
  }
  return dim - numeric_rank(rows, dim);
}

int simple_count(const RawTwisted& a) {
  const int n = a.order;
  std::vector<SparseRow> rows;
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      std::map<int, Cplx> v;
      v[prod(a, x, y)] += phase(tw(a, x, y), a.conductor);
      v[prod(a, y, x)] -= phase(tw(a, y, x), a.conductor);
      SparseRow r;
      for (auto& [i, c] : v) {
        if (std::abs(c) > 1e-12) r.emplace_back(i, c);
      }
      if (!r.empty()) rows.push_back(std::move(r));
    }
  }
  return n - numeric_rank(rows, n);
}

}  // namespace tdouble::oracle
