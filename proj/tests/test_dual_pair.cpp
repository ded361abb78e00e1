#include <doctest.h>

#include <algorithm>
#include <functional>

#include "fixtures.hpp"
#include "tdouble/error.hpp"
#include "tdouble/rep_decomp.hpp"

using namespace tdouble;
using namespace fixtures;

namespace {

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error thrown");
  return ErrorCode::Unsupported;
}

bool same_values(const TwoCocycle& a, const TwoCocycle& b) {
  const int n = a.group()->order();
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      if (Cyc(a.value(x, y)) != Cyc(b.value(x, y))) return false;
    }
  }
  return true;
}

ProjectiveAction from_matrices(const GroupPtr& g, std::vector<CycMatrix> ms, std::vector<int> levels) {
  ProjectiveAction phi{g, ms[0].rows(), std::move(levels), std::move(ms), {}};
  for (const auto& m : phi.exact) phi.numeric.push_back(m.to_complex());
  return phi;
}

/// M_s = the regular representation of S3 at every point of a trivial 2-point set.
StableFamily two_fixed_points() {
  const GroupPtr g = s3();
  const auto reg = twisted_regular(TwoCocycle::trivial(g));
  StableFamily f;
  f.group = g;
  f.labels_action = share(RightGSet::trivial(*g, 2));
  f.labels = {"A", "B"};
  f.dims = {6, 6};
  f.levels = {{6}, {6}};
  f.exact = {reg, reg};
  f.sync_numeric();
  return f;
}

BElement random_b(const FiniteGroup& g, int labels, Rng& rng) {
  BElement b;
  b.x = static_cast<Element>(rng() % g.order());
  for (int n = 0; n < labels; ++n) b.u.emplace_back(12, static_cast<long>(rng() % 12));
  return b;
}

}  // namespace

TEST_CASE("extract cocycle") {
  const GroupPtr g = s3();
  const TwoCocycle honest = extract_cocycle(regular_action(g));
  CHECK(same_values(honest, TwoCocycle::trivial(g)));

  const GroupPtr v = v4();
  const TwoCocycle p = extract_cocycle(pauli(v));
  CHECK(validate_cocycle(p).valid);
  CHECK(same_values(p, v4_cocycle(v)));
  CHECK(solve_coboundary(p, v4_cocycle(v), 4).has_value());
  CHECK(!solve_coboundary(p, TwoCocycle::trivial(v), 4).has_value());

  // Rescaling phi by lambda changes the cocycle by the coboundary of lambda.
  Rng rng(41);
  for (const auto& c : cocycle_zoo(43)) {
    if (c.alpha.group()->order() > 12) continue;
    INFO(c.name);
    const auto reg = twisted_regular(c.alpha);
    const ProjectiveAction phi = from_matrices(c.alpha.group(), reg, {c.alpha.group()->order()});
    const TwoCocycle base = extract_cocycle(phi);
    CHECK(same_values(base, c.alpha));
    const Coboundary l = random_coboundary(*c.alpha.group(), 6, rng);
    std::vector<CycMatrix> scaled;
    for (Element x = 0; x < c.alpha.group()->order(); ++x) scaled.push_back(reg[x] * Cyc(l.value(x)));
    const TwoCocycle moved = extract_cocycle(from_matrices(c.alpha.group(), scaled, {c.alpha.group()->order()}));
    CHECK(same_values(moved, apply_coboundary(base, l)));
  }

  const GroupPtr z2 = z(2);
  CycMatrix diag(2, 2);
  diag(0, 0) = 1;
  diag(1, 1) = 2;
  CHECK(code_of([&] { extract_cocycle(from_matrices(z2, {CycMatrix::identity(2), diag}, {2})); }) ==
        ErrorCode::NotProjective);
  CHECK(code_of([&] { extract_cocycle(from_matrices(z2, {CycMatrix::identity(2), CycMatrix::identity(2) * Cyc(2)}, {2})); }) ==
        ErrorCode::NotRootOfUnity);
}

TEST_CASE("set cocycles from families") {
  const GroupPtr v = v4();
  const SetCocycle single = build_set_cocycle(pauli(v).as_family());
  CHECK(same_values(single.component(0), v4_cocycle(v)));

  Rng rng(5);
  for (int trial = 0; trial < 30; ++trial) {
    const StableFamily f = random_family(rng);
    f.check_shapes();
    const SetCocycle alpha = build_set_cocycle(f);
    CHECK(validate_cocycle(alpha).valid);
  }

  StableFamily broken = two_fixed_points();
  broken.exact[1][0] = broken.exact[1][1];
  broken.sync_numeric();
  CHECK_THROWS_AS(broken.check_shapes(), Error);
}

TEST_CASE("double action") {
  Rng rng(6);
  for (int trial = 0; trial < 20; ++trial) {
    const StableFamily f = random_family(rng);
    const GeneralizedDouble d(build_set_cocycle(f));
    const ExactModule m = double_action(f, d);
    CHECK(m.dim == f.total_dim());
    CHECK(verify_module(m, d.structure()).valid);
    const NumericModule n = double_action_numeric(f, d);
    CHECK(verify_module(n, d.structure(), 1e-9).valid);
    CHECK(orbit_sums_invariant(f, n));
  }

  const StableFamily f = two_fixed_points();
  const GeneralizedDouble d(build_set_cocycle(f));
  NumericModule n = double_action_numeric(f, d);
  CHECK(orbit_sums_invariant(f, n));
  n.action[3](7, 0) = 1.0;
  CHECK(!orbit_sums_invariant(f, n));

  ProjectiveAction numeric_only = regular_action(s3());
  numeric_only.exact.clear();
  const StableFamily nf = numeric_only.as_family();
  const GeneralizedDouble nd(build_set_cocycle(nf));
  CHECK(code_of([&] { double_action(nf, nd); }) == ErrorCode::Unsupported);
  CHECK(verify_module(double_action_numeric(nf, nd), nd.structure(), 1e-9).valid);
}

TEST_CASE("psi isomorphism") {
  Rng rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    const StableFamily f = random_family(rng);
    const GeneralizedDouble d(build_set_cocycle(f));
    for (int s : orbit_representatives(*f.labels_action)) {
      const auto p = psi_isomorphism(f, d, s);
      REQUIRE(p.psi.rows() == p.orbit_module.dim);
      REQUIRE(p.psi.cols() == p.induced.dim);
      CHECK(p.psi * p.chi == CycMatrix::identity(p.orbit_module.dim));
      CHECK(p.chi * p.psi == CycMatrix::identity(p.induced.dim));
      CHECK(is_intertwiner(p.psi, p.induced, p.orbit_module));
      CHECK(is_intertwiner(p.chi, p.orbit_module, p.induced));
    }
  }
}

TEST_CASE("commutants") {
  CHECK(commutant(regular_action(s3())).size() == 6);
  CHECK(commutant(pauli(v4())).size() == 1);

  CycMatrix r(2, 2), s(2, 2);
  r(0, 1) = -1;
  r(1, 0) = 1;
  r(1, 1) = -1;
  s(0, 1) = 1;
  s(1, 0) = 1;
  // The 2-dim irreducible of S3: (0 1) -> s, (0 1 2) -> r.
  const GroupPtr g = s3();
  std::vector<CycMatrix> ms(6);
  ms[0] = CycMatrix::identity(2);
  ms[1] = s;
  ms[2] = r;
  std::vector<bool> seen(6, false);
  seen[0] = seen[1] = seen[2] = true;
  for (bool changed = true; changed;) {
    changed = false;
    for (Element a = 0; a < 6; ++a) {
      for (Element b = 0; b < 6; ++b) {
        const Element c = g->mul(a, b);
        if (seen[a] && seen[b] && !seen[c]) {
          ms[c] = ms[a] * ms[b];
          seen[c] = true;
          changed = true;
        }
      }
    }
  }
  const ProjectiveAction irrep = from_matrices(g, ms, {2});
  CHECK(same_values(extract_cocycle(irrep), TwoCocycle::trivial(g)));
  CHECK(commutant(irrep).size() == 1);
}

TEST_CASE("dual pair decomposition") {
  const GroupPtr g = s3();
  const ProjectiveAction reg = regular_action(g);
  const StableFamily rf = reg.as_family();
  const GeneralizedDouble rd(build_set_cocycle(rf));
  const auto rr = dual_pair_decompose(rf, rd);
  CHECK(rr.ok());
  CHECK(rr.global.commutant_dim == 6);
  std::vector<int> mult;
  for (const auto& e : rr.global.entries) {
    CHECK(e.multiplicity == e.simple_dim);
    mult.push_back(e.multiplicity);
  }
  std::sort(mult.begin(), mult.end());
  CHECK(mult == std::vector<int>{1, 1, 2});
  CHECK(rr.absent.empty());

  const GroupPtr v = v4();
  const StableFamily pf = pauli(v).as_family();
  const GeneralizedDouble pd(build_set_cocycle(pf));
  const auto pr = dual_pair_decompose(pf, pd);
  CHECK(pr.ok());
  REQUIRE(pr.global.entries.size() == 1);
  CHECK(pr.global.entries[0].simple_dim == 2);
  CHECK(pr.global.entries[0].multiplicity == 1);

  // Two labels swapped by Z2, each a line: one simple of dimension 2.
  Rng rng(8);
  const GroupPtr z2 = z(2);
  const StableFamily sf = induced_family(z2, TwoCocycle::trivial(z2), {0}, 1, rng, false);
  const GeneralizedDouble sd(build_set_cocycle(sf));
  const auto sr = dual_pair_decompose(sf, sd);
  CHECK(sr.ok());
  REQUIRE(sr.global.entries.size() == 1);
  CHECK(sr.global.entries[0].simple_dim == 2);
  CHECK(sr.global.entries[0].multiplicity == 1);

  // Two fixed points, each carrying the regular representation of S3.
  const StableFamily tf = two_fixed_points();
  const GeneralizedDouble td(build_set_cocycle(tf));
  const auto tr = dual_pair_decompose(tf, td);
  CHECK(tr.ok());
  CHECK(tr.global.commutant_dim == 12);
  CHECK(tr.absent.empty());

  for (int trial = 0; trial < 15; ++trial) {
    const StableFamily f = random_family(rng);
    const GeneralizedDouble d(build_set_cocycle(f));
    const auto r = dual_pair_decompose(f, d);
    CHECK(r.ok());
    CHECK(r.global.accounting == f.total_dim());
  }
}

TEST_CASE("levels") {
  // S3 regular at level 0 and the trivial representation at level 1.
  const GroupPtr g = s3();
  const auto reg = twisted_regular(TwoCocycle::trivial(g));
  std::vector<CycMatrix> ms;
  for (const auto& m : reg) {
    CycMatrix big(7, 7);
    big.set_block(0, 0, m);
    big(6, 6) = 1;
    ms.push_back(big);
  }
  const ProjectiveAction phi = from_matrices(g, ms, {6, 1});
  const StableFamily f = phi.as_family();
  CHECK(f.level_count() == 2);
  CHECK(f.level_coordinates(1) == std::vector<int>{6});
  const GeneralizedDouble d(build_set_cocycle(f));
  CHECK(commutant(f, d, false).size() == 9);
  CHECK(commutant(f, d, true).size() == 7);
  CHECK(commutant(phi).size() == 7);

  const auto r = dual_pair_decompose(f, d);
  CHECK(r.ok());
  REQUIRE(r.levels.size() == 2);
  CHECK(r.levels[0].dim == 6);
  CHECK(r.levels[1].dim == 1);
  CHECK(r.levels[1].accounting == 1);
  int present = 0;
  for (const auto& e : r.levels[1].entries) present += e.multiplicity;
  CHECK(present == 1);
  CHECK(r.global.commutant_dim == 9);
}

TEST_CASE("group B") {
  Rng rng(9);
  for (int trial = 0; trial < 10; ++trial) {
    const StableFamily f = random_family(rng);
    const SetCocycle alpha = build_set_cocycle(f);
    const FiniteGroup& g = *f.group;
    for (int k = 0; k < 10; ++k) {
      const BElement a = random_b(g, f.size(), rng);
      const BElement b = random_b(g, f.size(), rng);
      const BElement c = random_b(g, f.size(), rng);
      const BElement left = b_multiply(alpha, b_multiply(alpha, a, b), c);
      const BElement right = b_multiply(alpha, a, b_multiply(alpha, b, c));
      CHECK(left.x == right.x);
      for (int n = 0; n < f.size(); ++n) CHECK(Cyc(left.u[n]) == Cyc(right.u[n]));
      CHECK(b_action(f, b_multiply(alpha, a, b)) == b_action(f, a) * b_action(f, b));
      CHECK(b_action(f, left) == b_action(f, a) * b_action(f, b) * b_action(f, c));
    }
  }
}
