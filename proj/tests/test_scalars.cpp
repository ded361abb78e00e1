#include <doctest.h>

#include <cmath>
#include <random>

#include "tdouble/cyclotomic.hpp"
#include "tdouble/error.hpp"

using namespace tdouble;

namespace {

Cyc random_cyc(int n, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(-5, 5), den(1, 4);
  std::vector<mpq_class> powers(n);
  for (auto& p : powers) {
    p = mpq_class(num(rng), den(rng));
    p.canonicalize();
  }
  return Cyc::from_powers(n, powers);
}

}  // namespace

TEST_CASE("field arithmetic") {
  CHECK(Cyc::zeta(4) * Cyc::zeta(4) == Cyc(-1));
  CHECK(Cyc::zeta(3) + Cyc::zeta(3, 2) == Cyc(-1));
  const Cyc x = Cyc(1) + Cyc::zeta(5);
  CHECK(x * x.inverse() == Cyc(1));
  CHECK(Cyc::zeta(6, 3) == Cyc(-1));
  CHECK(Cyc::zeta(12, 4) == Cyc::zeta(3));
  CHECK(Cyc::zeta(8, 2) == Cyc::zeta(4));
  CHECK(Cyc::zeta(8) != Cyc::zeta(4));
  CHECK_THROWS_AS(Cyc(0).inverse(), Error);
  CHECK((Cyc::zeta(4) + Cyc::zeta(3)).conj() == Cyc::zeta(4, 3) + Cyc::zeta(3, 2));
}

TEST_CASE("exact laws on random triples") {
  std::mt19937_64 rng(7);
  const int conductors[] = {1, 2, 3, 4, 5, 6, 8, 12};
  for (int trial = 0; trial < 1000; ++trial) {
    const Cyc a = random_cyc(conductors[trial % 8], rng);
    const Cyc b = random_cyc(conductors[(trial / 8) % 8], rng);
    const Cyc c = random_cyc(conductors[(trial / 64) % 8], rng);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a + b) + c == a + (b + c));
    if (!a.is_zero()) CHECK(a * a.inverse() == Cyc(1));
  }
}

TEST_CASE("complex embedding") {
  CHECK(std::abs(embed_complex(Cyc(1)) - std::complex<double>(1, 0)) < 1e-15);
  CHECK(std::abs(embed_complex(Cyc::zeta(4)) - std::complex<double>(0, 1)) < 1e-15);
  const double h = std::sqrt(2.0) / 2;
  CHECK(std::abs(embed_complex(Cyc::zeta(8)) - std::complex<double>(h, h)) < 1e-12);

  std::mt19937_64 rng(11);
  for (int n = 1; n <= 24; ++n) {
    for (int trial = 0; trial < 5; ++trial) {
      const Cyc a = random_cyc(n, rng), b = random_cyc(n, rng);
      const double scale = std::max(1.0, std::abs(embed_complex(a)) * std::abs(embed_complex(b)));
      CHECK(std::abs(embed_complex(a * b) - embed_complex(a) * embed_complex(b)) <= 1e-12 * scale);
      CHECK(std::abs(embed_complex(a + b) - embed_complex(a) - embed_complex(b)) <= 1e-12 * scale);
    }
    const RootOfUnity u(n, 1), v(n, n - 2);
    CHECK(std::abs(embed_complex(Cyc(u * v)) - u.to_complex() * v.to_complex()) <= 1e-12);
  }
}

TEST_CASE("roots of unity") {
  CHECK(RootOfUnity(4, 2) == RootOfUnity(2, 1));
  CHECK((RootOfUnity(3, 1) * RootOfUnity(3, 2)).is_one());
  CHECK(RootOfUnity(6, 4).reduced().conductor == 3);
  CHECK(RootOfUnity(6, 4).promoted(12).exponent == 8);
  auto r = (Cyc::zeta(12, 5) * Cyc(-1)).as_root_of_unity();
  REQUIRE(r.has_value());
  CHECK(*r == RootOfUnity(12, 11));
  CHECK(!(Cyc(2)).as_root_of_unity().has_value());
  CHECK(!(Cyc(1) + Cyc::zeta(4)).as_root_of_unity().has_value());
}

TEST_CASE("parsing") {
  CHECK(parse_cyc("zeta(4)^3") == Cyc::zeta(4, 3));
  CHECK(parse_cyc("-3/4") == Cyc(mpq_class(-3, 4)));
  CHECK(parse_cyc("1 + 2*zeta(3)^2") == Cyc(1) + Cyc(2) * Cyc::zeta(3, 2));
  CHECK(parse_cyc(Cyc::zeta(8, 3).str()) == Cyc::zeta(8, 3));
  const Cyc y = Cyc(mpq_class(1, 3)) - Cyc::zeta(5, 2) * Cyc(4);
  CHECK(parse_cyc(y.str()) == y);
  CHECK_THROWS_AS(parse_cyc("zeta(0)"), Error);
  CHECK_THROWS_AS(parse_cyc("1 +"), Error);
}
