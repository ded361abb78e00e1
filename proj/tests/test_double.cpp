#include <doctest.h>

#include <algorithm>

#include "fixtures.hpp"
#include "tdouble/error.hpp"
#include "tdouble/rep_decomp.hpp"

using namespace tdouble;
using namespace fixtures;

namespace {

GeneralizedDouble swap_double() {
  const GroupPtr z2 = z(2);
  return GeneralizedDouble(SetCocycle::trivial(z2, swap_set(*z2)));
}

int expected_center(const GeneralizedDouble& d) {
  int total = 0;
  for (int r : orbit_representatives(d.gset())) {
    total += static_cast<int>(alpha_regular_classes(restrict_cocycle(d.cocycle(), r).cocycle).classes.size());
  }
  return total;
}

std::vector<std::vector<Cyc>> coefficient_vectors(const std::vector<DoubleElement>& xs) {
  std::vector<std::vector<Cyc>> out;
  for (const auto& x : xs) out.push_back(x.coeffs);
  return out;
}

}  // namespace

TEST_CASE("double products") {
  const GeneralizedDouble d = swap_double();
  CHECK(d.dim() == 4);
  // x (x) e(s) . x (x) e(t) = 1 (x) e(t), with s = 0, t = 1.
  const auto p = double_multiply(DoubleElement::basis(d, 1, 0), DoubleElement::basis(d, 1, 1));
  CHECK(p == DoubleElement::basis(d, 0, 1));
  CHECK(double_multiply(DoubleElement::basis(d, 1, 0), DoubleElement::basis(d, 1, 0)).is_zero());
  CHECK(double_multiply(DoubleElement::basis(d, 0, 0), DoubleElement::basis(d, 0, 1)).is_zero());

  // A singleton set reduces to the twisted group algebra.
  const GroupPtr v = v4();
  const TwoCocycle a = v4_cocycle(v);
  const GeneralizedDouble single(SetCocycle::constant(share(RightGSet::trivial(*v, 1)), a));
  const TwistedGroupAlgebra t(a);
  for (Element x = 0; x < 4; ++x) {
    for (Element y = 0; y < 4; ++y) {
      const auto dp = double_multiply(DoubleElement::basis(single, x, 0), DoubleElement::basis(single, y, 0));
      const auto tp = tga_multiply(AlgebraElement::basis(t, x), AlgebraElement::basis(t, y));
      CHECK(dp.coeffs == tp.coeffs);
    }
  }
  const GeneralizedDouble other = swap_double();
  CHECK_THROWS_AS(double_multiply(DoubleElement::basis(d, 0, 0), DoubleElement::basis(other, 0, 0)), Error);
}

TEST_CASE("identity and associativity") {
  for (const auto& c : double_zoo(3, 11)) {
    INFO(c.name);
    const GeneralizedDouble d(c.alpha);
    const auto one = double_identity(d);
    for (int i = 0; i < d.dim(); ++i) {
      const auto b = DoubleElement::basis(d, d.element_of(i), d.point_of(i));
      CHECK(double_multiply(one, b) == b);
      CHECK(double_multiply(b, one) == b);
    }
    if (d.dim() > 24) continue;
    bool ok = true;
    for (int i = 0; i < d.dim() && ok; ++i) {
      const auto bi = DoubleElement::basis(d, d.element_of(i), d.point_of(i));
      for (int j = 0; j < d.dim() && ok; ++j) {
        const auto bj = DoubleElement::basis(d, d.element_of(j), d.point_of(j));
        const auto ij = double_multiply(bi, bj);
        for (int k = 0; k < d.dim() && ok; ++k) {
          const auto bk = DoubleElement::basis(d, d.element_of(k), d.point_of(k));
          ok = double_multiply(ij, bk) == double_multiply(bi, double_multiply(bj, bk));
        }
      }
    }
    CHECK(ok);
  }
  const GroupPtr g = s3();
  const GeneralizedDouble single(SetCocycle::trivial(g, share(RightGSet::trivial(*g, 1))));
  CHECK(double_identity(single) == DoubleElement::basis(single, 0, 0));
}

TEST_CASE("cohomologous isomorphisms") {
  Rng rng(4);
  const GeneralizedDouble d = swap_double();
  const SetCoboundary none = SetCoboundary::trivial(2, d.group(), 1);
  const auto id = cohomologous_iso(d, d, none);
  for (const auto& c : id.diagonal) CHECK(c == Cyc(1));

  for (int trial = 0; trial < 5; ++trial) {
    const SetCoboundary l = random_set_coboundary(2, d.group(), 4, rng);
    const GeneralizedDouble e(apply_coboundary(d.cocycle(), l));
    const auto f = cohomologous_iso(d, e, l);
    CHECK(is_algebra_isomorphism(f, d, e));
  }
  SetCoboundary sign = SetCoboundary::trivial(2, d.group(), 2);
  sign.exponents[1] = 1;  // lambda_0(x) = -1
  const GeneralizedDouble e(apply_coboundary(d.cocycle(), sign));
  const auto f = cohomologous_iso(d, e, sign);
  CHECK(is_algebra_isomorphism(f, d, e));
  CHECK(f.diagonal[d.index(1, 0)] == Cyc(-1));
  CHECK(f.diagonal[d.index(1, 1)] == Cyc(1));
  CHECK_THROWS_AS(cohomologous_iso(d, d, sign), Error);

  for (const auto& c : double_zoo(8, 11)) {
    INFO(c.name);
    const GeneralizedDouble a(c.alpha);
    const SetCoboundary l = random_set_coboundary(a.set_size(), a.group(), 6, rng);
    const GeneralizedDouble b(apply_coboundary(c.alpha, l));
    CHECK(is_algebra_isomorphism(cohomologous_iso(a, b, l), a, b));
  }
}

TEST_CASE("blocks") {
  const GeneralizedDouble d = swap_double();
  const auto blocks = decompose_blocks(d);
  REQUIRE(blocks.orbits.size() == 1);
  CHECK(blocks.orbits[0].basis.size() == 4);
  CHECK(stabilizer_subspace(d, 0).size() == 1);
  CHECK(nilpotent_subspace(d, 0).size() == 1);
  CHECK(verify_blocks(d, blocks).all());

  const GroupPtr g = s3();
  const GeneralizedDouble t(SetCocycle::trivial(g, share(RightGSet::trivial(*g, 3))));
  const auto tb = decompose_blocks(t);
  CHECK(tb.orbits.size() == 3);
  for (const auto& o : tb.orbits) {
    CHECK(o.basis.size() == 6);
    CHECK(o.stabilizer.size() == 6);
  }

  for (const auto& c : double_zoo(12, 22)) {
    INFO(c.name);
    const GeneralizedDouble a(c.alpha);
    const auto b = decompose_blocks(a);
    const auto check = verify_blocks(a, b);
    INFO(check.violation);
    CHECK(check.all());
    for (const auto& o : b.orbits) {
      CHECK(double_multiply(orbit_identity(a, o.representative), orbit_identity(a, o.representative)) ==
            orbit_identity(a, o.representative));
      const int s = o.representative;
      CHECK(stabilizer_subspace(a, s).size() + nilpotent_subspace(a, s).size() == point_subspace(a, s).size());
    }
  }
}

TEST_CASE("stabilizer subalgebras") {
  const GroupPtr v = v4();
  const TwoCocycle a = v4_cocycle(v);
  const GeneralizedDouble d(SetCocycle::constant(share(RightGSet::trivial(*v, 2)), a));
  for (int s = 0; s < 2; ++s) {
    const auto iso = stabilizer_subalgebra_iso(d, s);
    CHECK(iso.multiplicative);
    CHECK(iso.restricted.cocycle == a);
    const auto simples = classify_simples(TwistedGroupAlgebra(iso.restricted.cocycle));
    CHECK(simples.dims == std::vector<int>{2});
  }
  const GroupPtr g = s3();
  const GeneralizedDouble free(SetCocycle::trivial(g, share(RightGSet::regular(*g))));
  const auto iso = stabilizer_subalgebra_iso(free, 0);
  CHECK(iso.restricted.stabilizer.group->order() == 1);
  CHECK(iso.multiplicative);
  for (const auto& c : double_zoo(13, 11)) {
    const GeneralizedDouble x(c.alpha);
    for (int s = 0; s < x.set_size(); ++s) CHECK(stabilizer_subalgebra_iso(x, s).multiplicative);
  }
}

TEST_CASE("double centre") {
  const GeneralizedDouble d = swap_double();
  auto c = double_center_basis(d);
  CHECK(c.elements.size() == 1);
  CHECK(c.path == "formula");
  CHECK(center_by_kernel(d).size() == 1);

  const GroupPtr g = s3();
  const GeneralizedDouble t(SetCocycle::trivial(g, share(RightGSet::trivial(*g, 2))));
  c = double_center_basis(t);
  CHECK(c.elements.size() == 6);

  const GroupPtr v = v4();
  const GeneralizedDouble single(SetCocycle::constant(share(RightGSet::trivial(*v, 1)), v4_cocycle(v)));
  CHECK(double_center_basis(single).elements.size() == 1);

  const GeneralizedDouble one(SetCocycle::trivial(trivial_group(), share(RightGSet::trivial(*trivial_group(), 1))));
  const auto k = center_by_kernel(one);
  REQUIRE(k.size() == 1);
  CHECK(k[0] == double_identity(one));

  for (const auto& cs : double_zoo(14, 22)) {
    INFO(cs.name);
    const GeneralizedDouble a(cs.alpha);
    const auto center = double_center_basis(a);
    const int expected = expected_center(a);
    CHECK(static_cast<int>(center.elements.size()) == expected);
    for (const auto& e : center.elements) CHECK(is_central(e));
    const auto vecs = coefficient_vectors(center.elements);
    CHECK(span_dimension(vecs, a.dim()) == expected);
    const auto kernel = center_by_kernel(a);
    CHECK(static_cast<int>(kernel.size()) == expected);
    auto both = vecs;
    for (const auto& e : kernel) both.push_back(e.coeffs);
    CHECK(span_dimension(both, a.dim()) == expected);
    CHECK(oracle::center_dimension(raw(cs.alpha)) == expected);
    CHECK(center.warnings.size() == static_cast<std::size_t>(
                                        std::count(center.orbit_used_formula.begin(), center.orbit_used_formula.end(), false)));
  }
}

TEST_CASE("compatibility fallback") {
  // A non-normal restricted cocycle forces the kernel path on that orbit.
  Rng rng(77);
  const GroupPtr g = s3();
  const TwoCocycle scrambled = apply_coboundary(TwoCocycle::trivial(g), random_coboundary(*g, 6, rng));
  REQUIRE(!is_normal_cocycle(scrambled));
  const GeneralizedDouble d(SetCocycle::constant(share(RightGSet::trivial(*g, 1)), scrambled));
  const auto c = double_center_basis(d);
  CHECK(c.path == "kernel");
  CHECK(!c.warnings.empty());
  CHECK(c.elements.size() == 3);
  for (const auto& e : c.elements) CHECK(is_central(e));
}
