#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace tdouble {

/// A root of unity zeta_N^k. Values with different conductors compare equal
/// when they denote the same complex number.
struct RootOfUnity {
  int conductor = 1;
  long exponent = 0;

  RootOfUnity() = default;
  RootOfUnity(int n, long k);

  /// Same value with the exponent reduced to lowest terms.
  RootOfUnity reduced() const;
  RootOfUnity inverse() const;
  /// Rewrite over a multiple of the conductor.
  RootOfUnity promoted(int n) const;
  bool is_one() const { return exponent == 0; }
  std::complex<double> to_complex() const;
  std::string str() const;

  friend RootOfUnity operator*(const RootOfUnity& a, const RootOfUnity& b);
  friend bool operator==(const RootOfUnity& a, const RootOfUnity& b);
};

int euler_phi(int n);
long lcm_conductor(long a, long b);

/// Exact element of the cyclotomic field Q(zeta_N), stored as the unique
/// coefficient vector of length phi(N) in the power basis reduced modulo the
/// N-th cyclotomic polynomial.
class Cyc {
 public:
  Cyc();
  Cyc(long value);  // NOLINT(google-explicit-constructor)
  explicit Cyc(const mpq_class& value);
  Cyc(const RootOfUnity& root);  // NOLINT(google-explicit-constructor)

  static Cyc zeta(int n, long k = 1);
  /// Build from arbitrary coefficients of 1, zeta_N, zeta_N^2, ... (any length).
  static Cyc from_powers(int n, const std::vector<mpq_class>& powers);

  int conductor() const { return conductor_; }
  const std::vector<mpq_class>& coeffs() const { return coeffs_; }
  bool is_zero() const;
  bool is_one() const;
  bool is_rational() const;
  /// Rational value; only meaningful when is_rational().
  mpq_class rational_part() const { return coeffs_[0]; }

  Cyc promoted(int n) const;
  Cyc inverse() const;
  /// Complex conjugate (zeta -> zeta^{-1}).
  Cyc conj() const;
  std::optional<RootOfUnity> as_root_of_unity() const;

  std::complex<double> to_complex() const;
  std::string str() const;

  Cyc& operator+=(const Cyc& other);
  Cyc& operator-=(const Cyc& other);
  Cyc& operator*=(const Cyc& other);
  Cyc& operator/=(const Cyc& other);
  Cyc operator-() const;

  friend Cyc operator+(Cyc a, const Cyc& b) { return a += b; }
  friend Cyc operator-(Cyc a, const Cyc& b) { return a -= b; }
  friend Cyc operator*(Cyc a, const Cyc& b) { return a *= b; }
  friend Cyc operator/(Cyc a, const Cyc& b) { return a /= b; }
  friend bool operator==(const Cyc& a, const Cyc& b);
  friend bool operator!=(const Cyc& a, const Cyc& b) { return !(a == b); }

 private:
  Cyc(int conductor, std::vector<mpq_class> coeffs);
  static void align(Cyc& a, Cyc& b);

  int conductor_;
  std::vector<mpq_class> coeffs_;
};

/// Complex embedding zeta_N -> exp(2 pi i / N).
inline std::complex<double> embed_complex(const Cyc& x) { return x.to_complex(); }

/// Parse `zeta(N)^k`, rationals `a/b`, and sums of `c*zeta(N)^k` terms.
Cyc parse_cyc(const std::string& text);

}  // namespace tdouble
