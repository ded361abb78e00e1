#include "tdouble/cocycle.hpp"

#include <numeric>

#include "tdouble/error.hpp"

namespace tdouble {

namespace {

long mod(long a, long n) {
  const long r = a % n;
  return r < 0 ? r + n : r;
}

std::string triple(long a, long b, long c) {
  return "(" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) + ")";
}

}  // namespace

// ----------------------------------------------------------------- coboundary

Coboundary Coboundary::trivial(const FiniteGroup& group, int conductor) {
  return Coboundary{conductor, std::vector<long>(group.order(), 0)};
}

Coboundary Coboundary::inverse() const {
  Coboundary out = *this;
  for (auto& k : out.exponents) k = mod(-k, conductor);
  return out;
}

SetCoboundary SetCoboundary::trivial(int set_size, const FiniteGroup& group, int conductor) {
  return SetCoboundary{conductor, group.order(),
                       std::vector<long>(static_cast<std::size_t>(set_size) * group.order(), 0)};
}

SetCoboundary SetCoboundary::inverse() const {
  SetCoboundary out = *this;
  for (auto& k : out.exponents) k = mod(-k, conductor);
  return out;
}

// ----------------------------------------------------------------- TwoCocycle

TwoCocycle::TwoCocycle(GroupPtr group, int conductor)
    : group_(std::move(group)), conductor_(conductor),
      exps_(static_cast<std::size_t>(group_->order()) * group_->order(), 0) {
  if (conductor < 1) throw Error(ErrorCode::InvalidCocycle, "conductor must be positive");
}

TwoCocycle::TwoCocycle(GroupPtr group, int conductor, std::vector<long> exponents)
    : group_(std::move(group)), conductor_(conductor), exps_(std::move(exponents)) {
  if (conductor < 1) throw Error(ErrorCode::InvalidCocycle, "conductor must be positive");
  if (exps_.size() != static_cast<std::size_t>(group_->order()) * group_->order()) {
    throw Error(ErrorCode::InvalidCocycle, "cocycle table must have |G|^2 entries");
  }
  for (auto& k : exps_) k = mod(k, conductor_);
}

TwoCocycle TwoCocycle::trivial(GroupPtr group) { return TwoCocycle(std::move(group), 1); }

void TwoCocycle::set_exponent(Element x, Element y, long k) { exps_[index(x, y)] = mod(k, conductor_); }

TwoCocycle TwoCocycle::promoted(int conductor) const {
  if (conductor % conductor_ != 0) {
    throw Error(ErrorCode::InvalidCocycle, "cannot promote cocycle to a non-multiple conductor");
  }
  std::vector<long> e = exps_;
  for (auto& k : e) k *= conductor / conductor_;
  return TwoCocycle(group_, conductor, std::move(e));
}

bool operator==(const TwoCocycle& a, const TwoCocycle& b) {
  if (a.group_->order() != b.group_->order()) return false;
  const long n = std::lcm(a.conductor_, b.conductor_);
  for (std::size_t i = 0; i < a.exps_.size(); ++i) {
    if (mod(a.exps_[i] * (n / a.conductor_) - b.exps_[i] * (n / b.conductor_), n) != 0) return false;
  }
  return true;
}

// ----------------------------------------------------------------- SetCocycle

SetCocycle::SetCocycle(GroupPtr group, GSetPtr gset, int conductor)
    : group_(std::move(group)), gset_(std::move(gset)), conductor_(conductor) {
  if (conductor < 1) throw Error(ErrorCode::InvalidCocycle, "conductor must be positive");
  if (gset_->group_order() != group_->order()) {
    throw Error(ErrorCode::CrossrefError, "G-set was built for a group of a different order");
  }
  const std::size_t n = group_->order();
  exps_.assign(static_cast<std::size_t>(gset_->size()) * n * n, 0);
}

SetCocycle SetCocycle::constant(GSetPtr gset, const TwoCocycle& alpha) {
  SetCocycle out(alpha.group(), std::move(gset), alpha.conductor());
  const int n = alpha.group()->order();
  for (int s = 0; s < out.gset_->size(); ++s) {
    for (int x = 0; x < n; ++x) {
      for (int y = 0; y < n; ++y) out.exps_[out.index(s, x, y)] = alpha.exponent(x, y);
    }
  }
  return out;
}

SetCocycle SetCocycle::trivial(GroupPtr group, GSetPtr gset) { return SetCocycle(std::move(group), std::move(gset), 1); }

void SetCocycle::set_exponent(int s, Element x, Element y, long k) { exps_[index(s, x, y)] = mod(k, conductor_); }

TwoCocycle SetCocycle::component(int s) const {
  const int n = group_->order();
  std::vector<long> e(static_cast<std::size_t>(n) * n);
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) e[static_cast<std::size_t>(x) * n + y] = exps_[index(s, x, y)];
  }
  return TwoCocycle(group_, conductor_, std::move(e));
}

SetCocycle SetCocycle::promoted(int conductor) const {
  if (conductor % conductor_ != 0) {
    throw Error(ErrorCode::InvalidCocycle, "cannot promote cocycle to a non-multiple conductor");
  }
  SetCocycle out = *this;
  out.conductor_ = conductor;
  for (auto& k : out.exps_) k *= conductor / conductor_;
  return out;
}

bool operator==(const SetCocycle& a, const SetCocycle& b) {
  if (a.exps_.size() != b.exps_.size()) return false;
  const long n = std::lcm(a.conductor_, b.conductor_);
  for (std::size_t i = 0; i < a.exps_.size(); ++i) {
    if (mod(a.exps_[i] * (n / a.conductor_) - b.exps_[i] * (n / b.conductor_), n) != 0) return false;
  }
  return true;
}

// ----------------------------------------------------------------- validation

CocycleCheck validate_cocycle(const TwoCocycle& alpha) {
  const FiniteGroup& g = *alpha.group();
  const Element e = g.identity();
  const long n = alpha.conductor();
  for (Element x = 0; x < g.order(); ++x) {
    if (alpha.exponent(x, e) != 0 || alpha.exponent(e, x) != 0) {
      return {false, "normalization fails: alpha(x,1) or alpha(1,x) != 1 at x=" + std::to_string(x)};
    }
  }
  for (Element x = 0; x < g.order(); ++x) {
    for (Element y = 0; y < g.order(); ++y) {
      const long xy = alpha.exponent(x, y);
      const Element pxy = g.mul(x, y);
      for (Element z = 0; z < g.order(); ++z) {
        const long lhs = xy + alpha.exponent(pxy, z);
        const long rhs = alpha.exponent(y, z) + alpha.exponent(x, g.mul(y, z));
        if (mod(lhs - rhs, n) != 0) return {false, "cocycle law fails at (x,y,z)=" + triple(x, y, z)};
      }
    }
  }
  return {};
}

CocycleCheck validate_cocycle(const SetCocycle& alpha) {
  const FiniteGroup& g = *alpha.group();
  const RightGSet& set = *alpha.gset();
  const Element e = g.identity();
  const long n = alpha.conductor();
  for (int s = 0; s < set.size(); ++s) {
    for (Element x = 0; x < g.order(); ++x) {
      if (alpha.exponent(s, x, e) != 0 || alpha.exponent(s, e, x) != 0) {
        return {false, "normalization fails at s=" + std::to_string(s) + " x=" + std::to_string(x)};
      }
    }
  }
  for (int s = 0; s < set.size(); ++s) {
    for (Element h = 0; h < g.order(); ++h) {
      for (Element k = 0; k < g.order(); ++k) {
        const Element hk = g.mul(h, k);
        for (Element l = 0; l < g.order(); ++l) {
          const int s_l = set.act(s, g.inv(l));
          const long lhs = alpha.exponent(s, hk, l) + alpha.exponent(s_l, h, k);
          const long rhs = alpha.exponent(s, h, g.mul(k, l)) + alpha.exponent(s, k, l);
          if (mod(lhs - rhs, n) != 0) {
            return {false, "set cocycle law fails at s=" + std::to_string(s) + " (h,k,l)=" + triple(h, k, l)};
          }
        }
      }
    }
  }
  return {};
}

// ----------------------------------------------------------- coboundary action

TwoCocycle apply_coboundary(const TwoCocycle& alpha, const Coboundary& lambda) {
  const FiniteGroup& g = *alpha.group();
  if (static_cast<int>(lambda.exponents.size()) != g.order()) {
    throw Error(ErrorCode::CrossrefError, "coboundary size does not match group order");
  }
  const int n = std::lcm(alpha.conductor(), lambda.conductor);
  const long sa = n / alpha.conductor();
  const long sl = n / lambda.conductor;
  std::vector<long> e(static_cast<std::size_t>(g.order()) * g.order());
  for (Element x = 0; x < g.order(); ++x) {
    for (Element y = 0; y < g.order(); ++y) {
      e[static_cast<std::size_t>(x) * g.order() + y] =
          alpha.exponent(x, y) * sa +
          (lambda.exponents[x] + lambda.exponents[y] - lambda.exponents[g.mul(x, y)]) * sl;
    }
  }
  return TwoCocycle(alpha.group(), n, std::move(e));
}

SetCocycle apply_coboundary(const SetCocycle& alpha, const SetCoboundary& lambda) {
  const FiniteGroup& g = *alpha.group();
  const RightGSet& set = *alpha.gset();
  if (lambda.order != g.order() ||
      lambda.exponents.size() != static_cast<std::size_t>(set.size()) * g.order()) {
    throw Error(ErrorCode::CrossrefError, "set coboundary shape does not match the double");
  }
  const int n = std::lcm(alpha.conductor(), lambda.conductor);
  const long sa = n / alpha.conductor();
  const long sl = n / lambda.conductor;
  auto lam = [&](int s, Element x) { return lambda.exponents[static_cast<std::size_t>(s) * g.order() + x]; };
  SetCocycle out(alpha.group(), alpha.gset(), n);
  for (int s = 0; s < set.size(); ++s) {
    for (Element x = 0; x < g.order(); ++x) {
      for (Element y = 0; y < g.order(); ++y) {
        const int sy = set.act(s, g.inv(y));
        out.set_exponent(s, x, y,
                         alpha.exponent(s, x, y) * sa + (lam(sy, x) - lam(s, g.mul(x, y)) + lam(s, y)) * sl);
      }
    }
  }
  return out;
}

// ----------------------------------------------------------------- regularity

bool is_alpha_regular(const TwoCocycle& alpha, Element g) {
  const FiniteGroup& grp = *alpha.group();
  for (Element x : centralizer(grp, g)) {
    if (alpha.exponent(g, x) != alpha.exponent(x, g)) return false;
  }
  return true;
}

RegularClasses alpha_regular_classes(const TwoCocycle& alpha) {
  RegularClasses out;
  for (auto& c : conjugacy_classes(*alpha.group())) {
    const bool rep_regular = is_alpha_regular(alpha, c.representative);
    for (Element m : c.members) {
      if (is_alpha_regular(alpha, m) != rep_regular && out.class_consistent) {
        out.class_consistent = false;
        out.violation = "class of " + std::to_string(c.representative) + " mixes regular and non-regular member " +
                        std::to_string(m);
      }
    }
    if (rep_regular) out.classes.push_back(std::move(c));
  }
  return out;
}

bool is_normal_cocycle(const TwoCocycle& alpha) {
  const FiniteGroup& g = *alpha.group();
  for (Element a = 0; a < g.order(); ++a) {
    if (!is_alpha_regular(alpha, a)) continue;
    for (Element x = 0; x < g.order(); ++x) {
      if (alpha.exponent(x, a) != alpha.exponent(g.conjugate(x, a), x)) return false;
    }
  }
  return true;
}

NormalizedCocycle normalize_cocycle(const TwoCocycle& alpha) {
  const FiniteGroup& g = *alpha.group();
  const long n = alpha.conductor();
  Coboundary lambda = Coboundary::trivial(g, alpha.conductor());
  for (const auto& cls : alpha_regular_classes(alpha).classes) {
    const Element rep = cls.representative;
    const auto cent = centralizer(g, rep);
    for (Element t : left_transversal(g, cent).reps) {
      // t rep t^{-1} (as basis products) = lambda(t rep t^{-1}) times the basis vector.
      const Element tg = g.mul(t, rep);
      const Element ti = g.inv(t);
      const long k = alpha.exponent(t, rep) + alpha.exponent(tg, ti) - alpha.exponent(ti, t);
      lambda.exponents[g.mul(tg, ti)] = mod(k, n);
    }
  }
  return {apply_coboundary(alpha, lambda), lambda};
}

RestrictedCocycle restrict_cocycle(const SetCocycle& alpha, int s) {
  const FiniteGroup& g = *alpha.group();
  const auto orbit = orbit_stabilizer(*alpha.gset(), g, s);
  RestrictedCocycle out{make_subgroup(g, orbit.stabilizer), {}};
  const int m = out.stabilizer.group->order();
  std::vector<long> e(static_cast<std::size_t>(m) * m);
  for (int a = 0; a < m; ++a) {
    for (int b = 0; b < m; ++b) {
      e[static_cast<std::size_t>(a) * m + b] =
          alpha.exponent(s, out.stabilizer.to_parent[a], out.stabilizer.to_parent[b]);
    }
  }
  out.cocycle = TwoCocycle(out.stabilizer.group, alpha.conductor(), std::move(e));
  return out;
}

TwoCocycle inflate(GroupPtr source, const std::vector<Element>& phi, const TwoCocycle& alpha) {
  const int n = source->order();
  if (static_cast<int>(phi.size()) != n) throw Error(ErrorCode::CrossrefError, "inflation map has wrong size");
  std::vector<long> e(static_cast<std::size_t>(n) * n);
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) e[static_cast<std::size_t>(x) * n + y] = alpha.exponent(phi[x], phi[y]);
  }
  return TwoCocycle(std::move(source), alpha.conductor(), std::move(e));
}

// ------------------------------------------------------------ solve coboundary

namespace {

long pow_long(long b, int e) {
  long r = 1;
  while (e-- > 0) r *= b;
  return r;
}

int valuation(long x, long p, int cap) {
  if (x == 0) return cap;
  int v = 0;
  while (x % p == 0 && v < cap) {
    x /= p;
    ++v;
  }
  return v;
}

// Inverse of a unit modulo q (extended Euclid).
long unit_inverse(long u, long q) {
  long r0 = q, r1 = mod(u, q), s0 = 0, s1 = 1;
  while (r1 != 0) {
    const long t = r0 / r1;
    std::tie(r0, r1) = std::make_pair(r1, r0 - t * r1);
    std::tie(s0, s1) = std::make_pair(s1, s0 - t * s1);
  }
  return mod(s0, q);
}

// Solve A x = b over Z/p^e by full-pivot diagonalization with unimodular row
// and column operations. Pivots of minimal valuation divide the remaining block.
std::optional<std::vector<long>> solve_prime_power(std::vector<std::vector<long>> a, std::vector<long> b,
                                                   int cols, long p, int e) {
  const long q = pow_long(p, e);
  const int rows = static_cast<int>(a.size());
  for (auto& row : a) {
    for (auto& v : row) v = mod(v, q);
  }
  for (auto& v : b) v = mod(v, q);
  std::vector<std::vector<long>> transform(cols, std::vector<long>(cols, 0));
  for (int i = 0; i < cols; ++i) transform[i][i] = 1;
  int rank = 0;
  std::vector<long> pivots;
  for (int k = 0; k < std::min(rows, cols); ++k) {
    int best_v = e, bi = -1, bj = -1;
    for (int i = k; i < rows && best_v > 0; ++i) {
      for (int j = k; j < cols; ++j) {
        const int v = valuation(a[i][j], p, e);
        if (v < best_v) {
          best_v = v;
          bi = i;
          bj = j;
          if (v == 0) break;
        }
      }
    }
    if (bi < 0) break;
    std::swap(a[k], a[bi]);
    std::swap(b[k], b[bi]);
    for (int i = 0; i < rows; ++i) std::swap(a[i][k], a[i][bj]);
    for (int i = 0; i < cols; ++i) std::swap(transform[i][k], transform[i][bj]);
    const long pv = pow_long(p, best_v);
    const long unit_inv = unit_inverse(a[k][k] / pv, q);
    for (int r = k + 1; r < rows; ++r) {
      if (a[r][k] == 0) continue;
      const long f = mod((a[r][k] / pv) * unit_inv, q);
      for (int c = k; c < cols; ++c) a[r][c] = mod(a[r][c] - f * a[k][c], q);
      b[r] = mod(b[r] - f * b[k], q);
    }
    for (int c = k + 1; c < cols; ++c) {
      if (a[k][c] == 0) continue;
      const long f = mod((a[k][c] / pv) * unit_inv, q);
      a[k][c] = 0;
      for (int i = 0; i < cols; ++i) transform[i][c] = mod(transform[i][c] - f * transform[i][k], q);
    }
    pivots.push_back(a[k][k]);
    ++rank;
  }
  std::vector<long> y(cols, 0);
  for (int k = 0; k < rank; ++k) {
    const int v = valuation(pivots[k], p, e);
    if (valuation(b[k], p, e) < v) return std::nullopt;
    const long pv = pow_long(p, v);
    y[k] = mod((b[k] / pv) * unit_inverse(pivots[k] / pv, q), q);
  }
  for (int r = rank; r < rows; ++r) {
    if (b[r] != 0) return std::nullopt;
  }
  std::vector<long> x(cols, 0);
  for (int i = 0; i < cols; ++i) {
    long acc = 0;
    for (int j = 0; j < cols; ++j) acc = mod(acc + transform[i][j] * y[j], q);
    x[i] = acc;
  }
  return x;
}

}  // namespace

std::optional<Coboundary> solve_coboundary(const TwoCocycle& alpha, const TwoCocycle& beta, int conductor) {
  const FiniteGroup& g = *alpha.group();
  if (beta.group()->order() != g.order()) throw Error(ErrorCode::CrossrefError, "cocycles live on different groups");
  const long n = std::lcm(std::lcm(static_cast<long>(conductor), static_cast<long>(alpha.conductor())),
                          static_cast<long>(beta.conductor()));
  const TwoCocycle a = alpha.promoted(static_cast<int>(n));
  const TwoCocycle b = beta.promoted(static_cast<int>(n));
  const Element e = g.identity();
  // Unknowns: lambda(g) for g != 1.
  std::vector<int> var(g.order(), -1);
  int cols = 0;
  for (Element x = 0; x < g.order(); ++x) {
    if (x != e) var[x] = cols++;
  }
  std::vector<std::vector<long>> rows;
  std::vector<long> rhs;
  for (Element x = 0; x < g.order(); ++x) {
    for (Element y = 0; y < g.order(); ++y) {
      const long t = mod(b.exponent(x, y) - a.exponent(x, y), n);
      if (x == e || y == e) {
        if (t != 0) return std::nullopt;
        continue;
      }
      std::vector<long> row(cols, 0);
      row[var[x]] += 1;
      row[var[y]] += 1;
      const Element xy = g.mul(x, y);
      if (xy != e) row[var[xy]] -= 1;
      rows.push_back(std::move(row));
      rhs.push_back(t);
    }
  }
  Coboundary lambda = Coboundary::trivial(g, static_cast<int>(n));
  if (cols == 0) return lambda;
  // Chinese remainder over the prime-power factors of n.
  std::vector<long> solution(cols, 0);
  long modulus = 1;
  long rest = n;
  for (long p = 2; rest > 1; ++p) {
    if (rest % p != 0) continue;
    int e_p = 0;
    while (rest % p == 0) {
      rest /= p;
      ++e_p;
    }
    const long q = pow_long(p, e_p);
    auto part = solve_prime_power(rows, rhs, cols, p, e_p);
    if (!part) return std::nullopt;
    // Combine x = solution (mod modulus) with x = part (mod q).
    const long inv = unit_inverse(mod(modulus, q), q);
    for (int i = 0; i < cols; ++i) {
      const long delta = mod(((*part)[i] - solution[i]) * inv, q);
      solution[i] = solution[i] + modulus * delta;
    }
    modulus *= q;
  }
  for (Element x = 0; x < g.order(); ++x) {
    if (x != e) lambda.exponents[x] = mod(solution[var[x]], n);
  }
  if (!(apply_coboundary(a, lambda) == b)) {
    throw Error(ErrorCode::InvalidCocycle, "coboundary solver produced an inconsistent answer");
  }
  return lambda;
}

}  // namespace tdouble
