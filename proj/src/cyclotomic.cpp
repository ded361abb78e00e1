#include "tdouble/cyclotomic.hpp"

#include <cctype>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <numeric>

#include "tdouble/error.hpp"

namespace tdouble {

namespace {

constexpr int kMaxConductor = 4096;

struct Field {
  int n = 1;
  int phi = 1;
  // Cyclotomic polynomial coefficients, low degree first, monic of degree phi.
  std::vector<long long> poly;
  // Reduced coordinates of zeta^k, 0 <= k < n.
  std::vector<std::vector<mpq_class>> powers;
  std::vector<std::complex<double>> basis;
};

std::vector<long long> poly_mul(const std::vector<long long>& a, const std::vector<long long>& b) {
  std::vector<long long> out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

// Exact division by a monic polynomial.
std::vector<long long> poly_div(std::vector<long long> num, const std::vector<long long>& den) {
  const std::size_t dn = den.size() - 1;
  std::vector<long long> q(num.size() - dn, 0);
  for (long deg = static_cast<long>(num.size()) - 1; deg >= static_cast<long>(dn); --deg) {
    const long long c = num[deg];
    q[deg - dn] = c;
    if (c == 0) continue;
    for (std::size_t i = 0; i <= dn; ++i) num[deg - dn + i] -= c * den[i];
  }
  return q;
}

int mobius(int n) {
  int result = 1;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      n /= p;
      if (n % p == 0) return 0;
      result = -result;
    }
  }
  if (n > 1) result = -result;
  return result;
}

std::vector<long long> cyclotomic_poly(int n) {
  std::vector<long long> num{1};
  std::vector<std::vector<long long>> dens;
  for (int d = 1; d <= n; ++d) {
    if (n % d != 0) continue;
    const int mu = mobius(n / d);
    if (mu == 0) continue;
    std::vector<long long> f(d + 1, 0);
    f[0] = -1;
    f[d] = 1;
    if (mu == 1) {
      num = poly_mul(num, f);
    } else {
      dens.push_back(std::move(f));
    }
  }
  for (const auto& den : dens) num = poly_div(num, den);
  return num;
}

void reduce_in_place(std::vector<mpq_class>& p, const Field& f) {
  if (p.size() < static_cast<std::size_t>(f.phi)) {
    p.resize(f.phi, 0);
    return;
  }
  for (std::size_t deg = p.size() - 1; deg >= static_cast<std::size_t>(f.phi); --deg) {
    if (sgn(p[deg]) != 0) {
      const mpq_class c = p[deg];
      for (int i = 0; i < f.phi; ++i) {
        if (f.poly[i] != 0) p[deg - f.phi + i] -= c * static_cast<long>(f.poly[i]);
      }
    }
  }
  p.resize(f.phi);
}

std::unique_ptr<Field> build_field(int n) {
  auto f = std::make_unique<Field>();
  f->n = n;
  f->poly = cyclotomic_poly(n);
  f->phi = static_cast<int>(f->poly.size()) - 1;
  f->powers.resize(n);
  for (int k = 0; k < n; ++k) {
    std::vector<mpq_class> p(k + 1, 0);
    p[k] = 1;
    reduce_in_place(p, *f);
    f->powers[k] = std::move(p);
  }
  const double two_pi = 2.0 * std::numbers::pi;
  for (int i = 0; i < f->phi; ++i) f->basis.push_back(std::polar(1.0, two_pi * i / n));
  return f;
}

const Field& field(int n) {
  if (n < 1 || n > kMaxConductor) {
    throw Error(ErrorCode::Unsupported, "cyclotomic conductor out of range: " + std::to_string(n));
  }
  static std::mutex mutex;
  static std::map<int, std::unique_ptr<Field>> cache;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, build_field(n)).first;
  return *it->second;
}

long mod(long a, long n) {
  const long r = a % n;
  return r < 0 ? r + n : r;
}

}  // namespace

int euler_phi(int n) {
  int result = n;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      result -= result / p;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

long lcm_conductor(long a, long b) { return std::lcm(a, b); }

// ---------------------------------------------------------------- RootOfUnity

RootOfUnity::RootOfUnity(int n, long k) : conductor(n), exponent(mod(k, n)) {
  if (n < 1) throw Error(ErrorCode::Unsupported, "root of unity conductor must be positive");
}

RootOfUnity RootOfUnity::reduced() const {
  const long g = std::gcd(exponent, static_cast<long>(conductor));
  if (exponent == 0) return RootOfUnity(1, 0);
  return RootOfUnity(static_cast<int>(conductor / g), exponent / g);
}

RootOfUnity RootOfUnity::inverse() const { return RootOfUnity(conductor, -exponent); }

RootOfUnity RootOfUnity::promoted(int n) const {
  if (n % conductor != 0) {
    throw Error(ErrorCode::Unsupported, "cannot promote zeta(" + std::to_string(conductor) +
                                            ") to conductor " + std::to_string(n));
  }
  return RootOfUnity(n, exponent * (n / conductor));
}

std::complex<double> RootOfUnity::to_complex() const {
  return std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(exponent) / conductor);
}

std::string RootOfUnity::str() const {
  const RootOfUnity r = reduced();
  if (r.exponent == 0) return "1";
  if (r.conductor == 2) return "-1";
  return "zeta(" + std::to_string(r.conductor) + ")^" + std::to_string(r.exponent);
}

RootOfUnity operator*(const RootOfUnity& a, const RootOfUnity& b) {
  const int n = static_cast<int>(std::lcm(a.conductor, b.conductor));
  return RootOfUnity(n, a.exponent * (n / a.conductor) + b.exponent * (n / b.conductor));
}

bool operator==(const RootOfUnity& a, const RootOfUnity& b) {
  const RootOfUnity x = a.reduced();
  const RootOfUnity y = b.reduced();
  return x.conductor == y.conductor && x.exponent == y.exponent;
}

// ------------------------------------------------------------------------ Cyc

Cyc::Cyc() : conductor_(1), coeffs_(1, 0) {}

Cyc::Cyc(long value) : conductor_(1), coeffs_(1, mpq_class(value)) {}

Cyc::Cyc(const mpq_class& value) : conductor_(1), coeffs_(1, value) {}

Cyc::Cyc(const RootOfUnity& root) : Cyc(zeta(root.conductor, root.exponent)) {}

Cyc::Cyc(int conductor, std::vector<mpq_class> coeffs)
    : conductor_(conductor), coeffs_(std::move(coeffs)) {}

Cyc Cyc::zeta(int n, long k) {
  const Field& f = field(n);
  return Cyc(n, f.powers[mod(k, n)]);
}

Cyc Cyc::from_powers(int n, const std::vector<mpq_class>& powers) {
  const Field& f = field(n);
  std::vector<mpq_class> acc(f.phi, 0);
  for (std::size_t k = 0; k < powers.size(); ++k) {
    if (sgn(powers[k]) == 0) continue;
    const auto& z = f.powers[k % n];
    for (int i = 0; i < f.phi; ++i) {
      if (sgn(z[i]) != 0) acc[i] += powers[k] * z[i];
    }
  }
  return Cyc(n, std::move(acc));
}

bool Cyc::is_zero() const {
  for (const auto& c : coeffs_) {
    if (sgn(c) != 0) return false;
  }
  return true;
}

bool Cyc::is_rational() const {
  for (std::size_t i = 1; i < coeffs_.size(); ++i) {
    if (sgn(coeffs_[i]) != 0) return false;
  }
  return true;
}

bool Cyc::is_one() const { return is_rational() && coeffs_[0] == 1; }

Cyc Cyc::promoted(int n) const {
  if (n == conductor_) return *this;
  if (n % conductor_ != 0) {
    throw Error(ErrorCode::Unsupported, "cannot promote Q(zeta_" + std::to_string(conductor_) +
                                            ") into Q(zeta_" + std::to_string(n) + ")");
  }
  const Field& f = field(n);
  const int step = n / conductor_;
  std::vector<mpq_class> acc(f.phi, 0);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (sgn(coeffs_[i]) == 0) continue;
    const auto& z = f.powers[(i * step) % n];
    for (int j = 0; j < f.phi; ++j) {
      if (sgn(z[j]) != 0) acc[j] += coeffs_[i] * z[j];
    }
  }
  return Cyc(n, std::move(acc));
}

void Cyc::align(Cyc& a, Cyc& b) {
  if (a.conductor_ == b.conductor_) return;
  const int n = static_cast<int>(std::lcm(a.conductor_, b.conductor_));
  a = a.promoted(n);
  b = b.promoted(n);
}

Cyc& Cyc::operator+=(const Cyc& other) {
  if (other.conductor_ == conductor_) {
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
    return *this;
  }
  if (other.conductor_ == 1) {
    coeffs_[0] += other.coeffs_[0];
    return *this;
  }
  Cyc b = other;
  align(*this, b);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += b.coeffs_[i];
  return *this;
}

Cyc& Cyc::operator-=(const Cyc& other) { return *this += -other; }

Cyc Cyc::operator-() const {
  Cyc out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

Cyc& Cyc::operator*=(const Cyc& other) {
  if (other.conductor_ == 1) {
    for (auto& c : coeffs_) c *= other.coeffs_[0];
    return *this;
  }
  if (conductor_ == 1) {
    const mpq_class s = coeffs_[0];
    *this = other;
    for (auto& c : coeffs_) c *= s;
    return *this;
  }
  Cyc b = other;
  align(*this, b);
  const Field& f = field(conductor_);
  std::vector<mpq_class> prod(2 * f.phi - 1, 0);
  for (int i = 0; i < f.phi; ++i) {
    if (sgn(coeffs_[i]) == 0) continue;
    for (int j = 0; j < f.phi; ++j) {
      if (sgn(b.coeffs_[j]) != 0) prod[i + j] += coeffs_[i] * b.coeffs_[j];
    }
  }
  reduce_in_place(prod, f);
  coeffs_ = std::move(prod);
  return *this;
}

Cyc Cyc::inverse() const {
  if (is_zero()) throw Error(ErrorCode::DivisionByZero, "inverse of zero cyclotomic");
  if (conductor_ == 1) return Cyc(mpq_class(1) / coeffs_[0]);
  const Field& f = field(conductor_);
  const int n = f.phi;
  // Column j holds zeta^j * x; solve for y with (multiplication by x) y = 1.
  std::vector<std::vector<mpq_class>> m(n, std::vector<mpq_class>(n + 1, 0));
  for (int j = 0; j < n; ++j) {
    std::vector<mpq_class> shifted(n + j, 0);
    for (int i = 0; i < n; ++i) shifted[i + j] = coeffs_[i];
    reduce_in_place(shifted, f);
    for (int i = 0; i < n; ++i) m[i][j] = shifted[i];
  }
  m[0][n] = 1;
  for (int col = 0; col < n; ++col) {
    int piv = col;
    while (piv < n && sgn(m[piv][col]) == 0) ++piv;
    std::swap(m[col], m[piv]);
    const mpq_class inv = mpq_class(1) / m[col][col];
    for (int k = col; k <= n; ++k) m[col][k] *= inv;
    for (int r = 0; r < n; ++r) {
      if (r == col || sgn(m[r][col]) == 0) continue;
      const mpq_class factor = m[r][col];
      for (int k = col; k <= n; ++k) m[r][k] -= factor * m[col][k];
    }
  }
  std::vector<mpq_class> y(n);
  for (int i = 0; i < n; ++i) y[i] = m[i][n];
  return Cyc(conductor_, std::move(y));
}

Cyc& Cyc::operator/=(const Cyc& other) { return *this *= other.inverse(); }

Cyc Cyc::conj() const {
  if (conductor_ == 1) return *this;
  const Field& f = field(conductor_);
  std::vector<mpq_class> acc(f.phi, 0);
  for (int i = 0; i < f.phi; ++i) {
    if (sgn(coeffs_[i]) == 0) continue;
    const auto& z = f.powers[(conductor_ - i) % conductor_];
    for (int j = 0; j < f.phi; ++j) {
      if (sgn(z[j]) != 0) acc[j] += coeffs_[i] * z[j];
    }
  }
  return Cyc(conductor_, std::move(acc));
}

bool operator==(const Cyc& a, const Cyc& b) {
  if (a.conductor_ == b.conductor_) return a.coeffs_ == b.coeffs_;
  Cyc x = a;
  Cyc y = b;
  Cyc::align(x, y);
  return x.coeffs_ == y.coeffs_;
}

std::optional<RootOfUnity> Cyc::as_root_of_unity() const {
  const std::complex<double> z = to_complex();
  if (std::abs(std::abs(z) - 1.0) > 1e-6) return std::nullopt;
  const int m = static_cast<int>(std::lcm(2, conductor_));
  const double turns = std::arg(z) / (2.0 * std::numbers::pi);
  const long k = mod(std::lround(turns * m), m);
  if (Cyc::zeta(m, k) == *this) return RootOfUnity(m, k).reduced();
  return std::nullopt;
}

std::complex<double> Cyc::to_complex() const {
  const Field& f = field(conductor_);
  std::complex<double> acc = 0.0;
  for (int i = 0; i < f.phi; ++i) {
    if (sgn(coeffs_[i]) != 0) acc += coeffs_[i].get_d() * f.basis[i];
  }
  return acc;
}

std::string Cyc::str() const {
  if (is_rational()) return coeffs_[0].get_str();
  if (auto root = as_root_of_unity()) return root->str();
  std::string out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const mpq_class& c = coeffs_[i];
    if (sgn(c) == 0) continue;
    const bool negative = sgn(c) < 0;
    const mpq_class mag = abs(c);
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    if (i == 0) {
      out += mag.get_str();
      continue;
    }
    if (mag != 1) out += mag.get_str() + "*";
    out += "zeta(" + std::to_string(conductor_) + ")^" + std::to_string(i);
  }
  return out;
}

// -------------------------------------------------------------------- parsing

namespace {

std::string strip(const std::string& s) {
  std::size_t b = 0;
  std::size_t e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

[[noreturn]] void bad(const std::string& text, const std::string& why) {
  throw Error(ErrorCode::ParseError, "bad cyclotomic scalar '" + text + "': " + why);
}

Cyc parse_factor(const std::string& raw) {
  const std::string f = strip(raw);
  if (f.empty()) bad(raw, "empty factor");
  if (f.rfind("zeta(", 0) == 0) {
    const auto close = f.find(')');
    if (close == std::string::npos) bad(f, "missing ')'");
    int n = 0;
    long k = 1;
    try {
      n = std::stoi(f.substr(5, close - 5));
      const std::string rest = strip(f.substr(close + 1));
      if (!rest.empty()) {
        if (rest[0] != '^') bad(f, "expected '^'");
        std::size_t used = 0;
        const std::string e = strip(rest.substr(1));
        k = std::stol(e, &used);
        if (used != e.size()) bad(f, "trailing characters");
      }
    } catch (const std::logic_error&) {
      bad(f, "malformed zeta(N)^k");
    }
    if (n < 1) bad(f, "conductor must be positive");
    return Cyc::zeta(n, k);
  }
  for (char c : f) {
    if (!(std::isdigit(static_cast<unsigned char>(c)) || c == '/')) bad(f, "not a rational");
  }
  try {
    mpq_class q(f, 10);
    if (q.get_den() == 0) bad(f, "zero denominator");
    q.canonicalize();
    return Cyc(q);
  } catch (const std::invalid_argument&) {
    bad(f, "not a rational");
  }
}

Cyc parse_term(const std::string& term) {
  Cyc acc(1);
  std::size_t start = 0;
  for (std::size_t i = 0; i <= term.size(); ++i) {
    if (i == term.size() || term[i] == '*') {
      acc *= parse_factor(term.substr(start, i - start));
      start = i + 1;
    }
  }
  return acc;
}

}  // namespace

Cyc parse_cyc(const std::string& text) {
  const std::string s = strip(text);
  if (s.empty()) bad(text, "empty");
  Cyc total;
  int depth = 0;
  std::size_t start = 0;
  bool negative = false;
  bool seen_term = false;
  for (std::size_t i = 0; i <= s.size(); ++i) {
    const char c = i < s.size() ? s[i] : '\0';
    if (c == '(') ++depth;
    if (c == ')') --depth;
    const bool boundary = i == s.size() || (depth == 0 && (c == '+' || c == '-') &&
                                            (i == 0 || s[i - 1] != '^'));
    if (!boundary) continue;
    const std::string piece = strip(s.substr(start, i - start));
    if (!piece.empty()) {
      Cyc t = parse_term(piece);
      total += negative ? -t : t;
      seen_term = true;
    } else if (i != 0) {
      bad(text, "dangling operator");
    }
    negative = c == '-';
    start = i + 1;
  }
  if (!seen_term) bad(text, "no terms");
  return total;
}

}  // namespace tdouble
