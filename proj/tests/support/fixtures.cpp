#include "fixtures.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <numeric>

namespace fixtures {

GroupPtr share(FiniteGroup g) { return std::make_shared<const FiniteGroup>(std::move(g)); }
GSetPtr share(RightGSet s) { return std::make_shared<const RightGSet>(std::move(s)); }

GroupPtr trivial_group() { return share(cyclic_group(1)); }
GroupPtr z(int n) { return share(cyclic_group(n)); }

GroupPtr s3() { return share(FiniteGroup::from_permutations({parse_cycles("(0 1)", 3), parse_cycles("(0 1 2)", 3)})); }

GroupPtr v4() { return share(direct_product(cyclic_group(2), cyclic_group(2))); }

GroupPtr d4() { return share(dihedral_group(4)); }

GroupPtr q8() {
  // Units 1, i, j, k as 0..3; element (sign, unit) at index 4*sign + unit.
  static const int unit[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  static const int sign[4][4] = {{0, 0, 0, 0}, {0, 1, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 1}};
  std::vector<std::vector<int>> t(8, std::vector<int>(8));
  for (int a = 0; a < 8; ++a) {
    for (int b = 0; b < 8; ++b) {
      const int ua = a % 4, ub = b % 4;
      const int sg = (a / 4 + b / 4 + sign[ua][ub]) % 2;
      t[a][b] = 4 * sg + unit[ua][ub];
    }
  }
  return share(FiniteGroup::from_table(t));
}

GroupPtr a4() {
  return share(FiniteGroup::from_permutations({parse_cycles("(0 1 2)", 4), parse_cycles("(0 1)(2 3)", 4)}));
}

GroupPtr s4() { return share(symmetric_group(4)); }

GroupPtr zn_x_zn(int n) { return share(direct_product(cyclic_group(n), cyclic_group(n))); }

TwoCocycle v4_cocycle(const GroupPtr& v4) { return bilinear(v4, 2, 2); }

TwoCocycle bilinear(const GroupPtr& g, int m, int n, int k) {
  const int c = std::gcd(m, n);
  TwoCocycle alpha(g, c);
  for (Element x = 0; x < g->order(); ++x) {
    for (Element y = 0; y < g->order(); ++y) {
      const long a2 = x % n, b1 = y / n;
      alpha.set_exponent(x, y, (k * a2 * b1) % c);
    }
  }
  return alpha;
}

TwoCocycle s3_x_v4_inflated(const GroupPtr& g) {
  const GroupPtr v = v4();
  std::vector<Element> phi(g->order());
  for (Element x = 0; x < g->order(); ++x) phi[x] = x % 4;
  return inflate(g, phi, v4_cocycle(v));
}

TwoCocycle d4_projective(const GroupPtr& d4) {
  const FiniteGroup& g = *d4;
  const auto& perms = g.permutations();
  const std::vector<int> rot{1, 2, 3, 0}, ref{0, 3, 2, 1};
  Element r = -1, s = -1;
  for (Element x = 0; x < g.order(); ++x) {
    if (perms[x] == rot) r = x;
    if (perms[x] == ref) s = x;
  }
  // Rotation by 45 degrees and a reflection generate D8, whose centre is -1.
  const Cyc h = (Cyc::zeta(8, 1) + Cyc::zeta(8, 7)) * Cyc(mpq_class(1, 2));
  CycMatrix R(2, 2), S(2, 2);
  R(0, 0) = h;
  R(0, 1) = -h;
  R(1, 0) = h;
  R(1, 1) = h;
  S(0, 0) = 1;
  S(1, 1) = -1;
  ProjectiveAction phi{d4, 2, {2}, std::vector<CycMatrix>(g.order()), {}};
  std::vector<bool> seen(g.order(), false);
  std::vector<Element> queue{g.identity()};
  phi.exact[g.identity()] = CycMatrix::identity(2);
  seen[g.identity()] = true;
  for (std::size_t q = 0; q < queue.size(); ++q) {
    const Element x = queue[q];
    for (auto [gen, m] : {std::pair{r, &R}, std::pair{s, &S}}) {
      const Element y = g.mul(x, gen);
      if (seen[y]) continue;
      seen[y] = true;
      phi.exact[y] = phi.exact[x] * *m;
      queue.push_back(y);
    }
  }
  for (const auto& m : phi.exact) phi.numeric.push_back(m.to_complex());
  return extract_cocycle(phi);
}

Coboundary random_coboundary(const FiniteGroup& g, int conductor, Rng& rng) {
  Coboundary l = Coboundary::trivial(g, conductor);
  std::uniform_int_distribution<long> pick(0, conductor - 1);
  for (Element x = 0; x < g.order(); ++x) {
    if (x != g.identity()) l.exponents[x] = pick(rng);
  }
  return l;
}

SetCoboundary random_set_coboundary(int set_size, const FiniteGroup& g, int conductor, Rng& rng) {
  SetCoboundary l = SetCoboundary::trivial(set_size, g, conductor);
  std::uniform_int_distribution<long> pick(0, conductor - 1);
  for (int s = 0; s < set_size; ++s) {
    for (Element x = 0; x < g.order(); ++x) {
      if (x != g.identity()) l.exponents[static_cast<std::size_t>(s) * g.order() + x] = pick(rng);
    }
  }
  return l;
}

TwoCocycle twist(const TwoCocycle& alpha, Rng& rng) {
  static const int conductors[] = {2, 3, 4, 6};
  const int n = conductors[rng() % 4];
  return apply_coboundary(alpha, random_coboundary(*alpha.group(), n, rng));
}

std::vector<CocycleCase> cocycle_zoo(std::uint64_t seed) {
  Rng rng(seed);
  std::vector<CocycleCase> out;
  auto add = [&](std::string name, TwoCocycle a) { out.push_back({std::move(name), std::move(a)}); };
  const GroupPtr S3 = s3(), V4 = v4(), D4 = d4(), Q8 = q8(), A4 = a4(), S4 = s4();
  const GroupPtr Z33 = zn_x_zn(3), Z44 = zn_x_zn(4);
  const GroupPtr Z42 = share(direct_product(cyclic_group(4), cyclic_group(2)));
  const GroupPtr Z222 = share(direct_product(direct_product(cyclic_group(2), cyclic_group(2)), cyclic_group(2)));
  const GroupPtr S3V4 = share(direct_product(*S3, *V4));
  const GroupPtr D6 = share(dihedral_group(6));
  add("trivial group", TwoCocycle::trivial(trivial_group()));
  add("Z2", TwoCocycle::trivial(z(2)));
  add("Z3 twisted", twist(TwoCocycle::trivial(z(3)), rng));
  add("S3", TwoCocycle::trivial(S3));
  add("S3 twisted", twist(TwoCocycle::trivial(S3), rng));
  add("V4 nontrivial", v4_cocycle(V4));
  add("V4 nontrivial twisted", twist(v4_cocycle(V4), rng));
  add("Z4xZ2 bilinear", bilinear(Z42, 4, 2));
  add("Z3xZ3 bilinear", bilinear(Z33, 3, 3));
  add("Z3xZ3 bilinear squared twisted", twist(bilinear(Z33, 3, 3, 2), rng));
  // a1 b2 + a2 b3 on Z2^3, indices 4 a1 + 2 a2 + a3.
  {
    TwoCocycle a(Z222, 2);
    for (Element x = 0; x < 8; ++x) {
      for (Element y = 0; y < 8; ++y) {
        const long e = ((x >> 2) & 1) * ((y >> 1) & 1) + ((x >> 1) & 1) * (y & 1);
        a.set_exponent(x, y, e % 2);
      }
    }
    add("Z2^3 bilinear", a);
  }
  add("D4", TwoCocycle::trivial(D4));
  add("D4 projective", d4_projective(D4));
  add("D4 projective twisted", twist(d4_projective(D4), rng));
  add("Q8 twisted", twist(TwoCocycle::trivial(Q8), rng));
  add("A4", TwoCocycle::trivial(A4));
  add("S4", TwoCocycle::trivial(S4));
  add("S3xV4 inflated", s3_x_v4_inflated(S3V4));
  add("Z4xZ4 bilinear", bilinear(Z44, 4, 4));
  add("Z4xZ4 bilinear squared", bilinear(Z44, 4, 4, 2));
  add("Z6 twisted", twist(TwoCocycle::trivial(z(6)), rng));
  add("D6 twisted", twist(TwoCocycle::trivial(D6), rng));
  return out;
}

GSetPtr swap_set(const FiniteGroup& z2) { return share(RightGSet::from_table(z2, {{0, 1}, {1, 0}})); }

GSetPtr natural_set(const FiniteGroup& g) {
  const auto& perms = g.permutations();
  const int n = static_cast<int>(perms.at(0).size());
  std::vector<std::vector<int>> action(n, std::vector<int>(g.order()));
  for (int s = 0; s < n; ++s) {
    for (Element x = 0; x < g.order(); ++x) action[s][x] = perms[x][s];
  }
  return share(RightGSet::from_table(g, action));
}

GSetPtr disjoint_union(const FiniteGroup& g, const std::vector<GSetPtr>& parts) {
  std::vector<std::vector<int>> action;
  int base = 0;
  for (const auto& p : parts) {
    for (int s = 0; s < p->size(); ++s) {
      std::vector<int> row(g.order());
      for (Element x = 0; x < g.order(); ++x) row[x] = base + p->act(s, x);
      action.push_back(row);
    }
    base += p->size();
  }
  return share(RightGSet::from_table(g, action));
}

SetCocycle random_set_cocycle(GSetPtr set, const std::vector<TwoCocycle>& pool, int conductor, Rng& rng) {
  const GroupPtr g = pool.at(0).group();
  long n = conductor;
  for (const auto& a : pool) n = lcm_conductor(n, a.conductor());
  SetCocycle alpha(g, set, static_cast<int>(n));
  const auto reps = orbit_representatives(*set);
  for (int r : reps) {
    const TwoCocycle base = pool[rng() % pool.size()].promoted(static_cast<int>(n));
    for (int s : orbit_stabilizer(*set, *g, r).orbit) {
      for (Element x = 0; x < g->order(); ++x) {
        for (Element y = 0; y < g->order(); ++y) alpha.set_exponent(s, x, y, base.exponent(x, y));
      }
    }
  }
  return apply_coboundary(alpha, random_set_coboundary(set->size(), *g, conductor, rng));
}

std::vector<DoubleCase> double_zoo(std::uint64_t seed, int count) {
  Rng rng(seed);
  const GroupPtr Z2 = z(2), S3 = s3(), V4 = v4(), D4 = d4(), A4 = a4(), Z33 = zn_x_zn(3), Z6 = z(6);
  const TwoCocycle triv_s3 = TwoCocycle::trivial(S3);
  const TwoCocycle v4c = v4_cocycle(V4);
  const TwoCocycle d4c = d4_projective(D4);
  const TwoCocycle z33c = bilinear(Z33, 3, 3);
  const std::vector<Element> v4_first{0, v4_index(1, 0)};
  const std::vector<Element> z33_first{0, 3, 6};
  struct Template {
    std::string name;
    GSetPtr set;
    std::vector<TwoCocycle> pool;
  };
  std::vector<Template> templates{
      {"Z2 swap", swap_set(*Z2), {TwoCocycle::trivial(Z2)}},
      {"S3 trivial on 2", share(RightGSet::trivial(*S3, 2)), {triv_s3}},
      {"S3 natural", natural_set(*S3), {triv_s3}},
      {"S3 regular", share(RightGSet::regular(*S3)), {triv_s3}},
      {"V4 cosets plus point",
       disjoint_union(*V4, {share(RightGSet::cosets(*V4, v4_first)), share(RightGSet::trivial(*V4, 1))}),
       {v4c, TwoCocycle::trivial(V4)}},
      {"V4 trivial on 2", share(RightGSet::trivial(*V4, 2)), {v4c}},
      {"D4 natural", natural_set(*D4), {d4c, TwoCocycle::trivial(D4)}},
      {"D4 two points", share(RightGSet::trivial(*D4, 2)), {d4c}},
      {"Z3xZ3 cosets plus point",
       disjoint_union(*Z33, {share(RightGSet::cosets(*Z33, z33_first)), share(RightGSet::trivial(*Z33, 1))}),
       {z33c}},
      {"A4 natural", natural_set(*A4), {TwoCocycle::trivial(A4)}},
      {"Z6 on cosets of Z3",
       share(RightGSet::cosets(*Z6, std::vector<Element>(generated(*Z6, {2})))),
       {TwoCocycle::trivial(Z6)}},
  };
  static const int conductors[] = {1, 2, 3, 4, 6};
  std::vector<DoubleCase> out;
  for (int i = 0; i < count; ++i) {
    const auto& t = templates[i % templates.size()];
    const int c = i < static_cast<int>(templates.size()) ? 1 : conductors[rng() % 5];
    out.push_back({t.name + " #" + std::to_string(i), random_set_cocycle(t.set, t.pool, c, rng)});
  }
  return out;
}

oracle::RawTwisted raw(const TwoCocycle& alpha) {
  const FiniteGroup& g = *alpha.group();
  oracle::RawTwisted r;
  r.order = g.order();
  r.conductor = alpha.conductor();
  r.mul.assign(g.table().begin(), g.table().end());
  r.exps = alpha.exponents();
  return r;
}

oracle::RawDouble raw(const SetCocycle& alpha) {
  const FiniteGroup& g = *alpha.group();
  const RightGSet& s = *alpha.gset();
  oracle::RawDouble r;
  r.order = g.order();
  r.set_size = s.size();
  r.conductor = alpha.conductor();
  r.mul.assign(g.table().begin(), g.table().end());
  for (int p = 0; p < s.size(); ++p) {
    for (Element x = 0; x < g.order(); ++x) r.action.push_back(s.act(p, x));
  }
  for (int p = 0; p < s.size(); ++p) {
    for (Element x = 0; x < g.order(); ++x) {
      for (Element y = 0; y < g.order(); ++y) r.exps.push_back(alpha.exponent(p, x, y));
    }
  }
  return r;
}

std::vector<Element> generated(const FiniteGroup& g, const std::vector<Element>& gens) {
  std::vector<bool> in(g.order(), false);
  std::vector<Element> out{g.identity()};
  in[g.identity()] = true;
  for (std::size_t q = 0; q < out.size(); ++q) {
    for (Element s : gens) {
      const Element y = g.mul(out[q], s);
      if (!in[y]) {
        in[y] = true;
        out.push_back(y);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<CycMatrix> twisted_regular(const TwoCocycle& beta) {
  const FiniteGroup& h = *beta.group();
  const int n = h.order();
  std::vector<CycMatrix> out;
  for (Element a = 0; a < n; ++a) {
    CycMatrix m(n, n);
    for (Element k = 0; k < n; ++k) m(h.mul(a, k), k) = Cyc(beta.value(a, k));
    out.push_back(std::move(m));
  }
  return out;
}

ProjectiveAction pauli(const GroupPtr& v4) {
  CycMatrix x(2, 2), zm(2, 2);
  x(0, 1) = 1;
  x(1, 0) = 1;
  zm(0, 0) = 1;
  zm(1, 1) = -1;
  ProjectiveAction phi{v4, 2, {2}, std::vector<CycMatrix>(4), {}};
  for (int a1 = 0; a1 < 2; ++a1) {
    for (int a2 = 0; a2 < 2; ++a2) {
      CycMatrix m = CycMatrix::identity(2);
      if (a1) m = m * x;
      if (a2) m = m * zm;
      phi.exact[v4_index(a1, a2)] = m;
    }
  }
  for (const auto& m : phi.exact) phi.numeric.push_back(m.to_complex());
  return phi;
}

ProjectiveAction regular_action(const GroupPtr& g) {
  ProjectiveAction phi{g, g->order(), {g->order()}, twisted_regular(TwoCocycle::trivial(g)), {}};
  for (const auto& m : phi.exact) phi.numeric.push_back(m.to_complex());
  return phi;
}

CycMatrix random_orthogonal(int n, Rng& rng) {
  // Cayley transform (1 - A)(1 + A)^{-1} of a sparse skew-symmetric integer A.
  std::uniform_int_distribution<int> pick(-3, 3);
  CycMatrix a(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < i; ++j) {
      const int v = pick(rng);
      if (std::abs(v) > 1) continue;
      a(i, j) = v;
      a(j, i) = -v;
    }
  }
  return (CycMatrix::identity(n) - a) * inverse(CycMatrix::identity(n) + a);
}

namespace {

TwoCocycle restrict_to(const TwoCocycle& alpha, const Subgroup& sub) {
  const int n = sub.group->order();
  TwoCocycle beta(sub.group, alpha.conductor());
  for (Element a = 0; a < n; ++a) {
    for (Element b = 0; b < n; ++b) beta.set_exponent(a, b, alpha.exponent(sub.to_parent[a], sub.to_parent[b]));
  }
  return beta;
}

}  // namespace

StableFamily induced_family(const GroupPtr& g, const TwoCocycle& alpha, const std::vector<Element>& h,
                            int scale_conductor, Rng& rng, bool randomize) {
  const FiniteGroup& G = *g;
  const Subgroup sub = make_subgroup(G, h);
  const auto pi = twisted_regular(restrict_to(alpha, sub));
  const int d = sub.group->order();
  const CosetTransversal t = right_transversal(G, h);
  StableFamily f;
  f.group = g;
  f.labels_action = share(RightGSet::cosets(G, h));
  const int m = f.labels_action->size();
  std::vector<CycMatrix> basis, basis_inv;
  for (int i = 0; i < m; ++i) {
    f.labels.push_back("M" + std::to_string(i));
    f.dims.push_back(d);
    f.levels.push_back({d});
    basis.push_back(randomize ? random_orthogonal(d, rng) : CycMatrix::identity(d));
    basis_inv.push_back(inverse(basis.back()));
  }
  std::uniform_int_distribution<long> pick(0, scale_conductor - 1);
  f.exact.assign(m, std::vector<CycMatrix>(G.order()));
  for (int i = 0; i < m; ++i) {
    for (Element x = 0; x < G.order(); ++x) {
      const int j = f.labels_action->act(i, G.inv(x));
      const Element u = G.mul(G.mul(t.reps[j], x), G.inv(t.reps[i]));
      CycMatrix phi = basis[j] * pi.at(sub.from_parent[u]) * basis_inv[i];
      if (randomize && x != G.identity()) phi *= Cyc::zeta(scale_conductor, pick(rng));
      f.exact[i][x] = std::move(phi);
    }
  }
  f.sync_numeric();
  return f;
}

StableFamily random_family(Rng& rng) {
  static const int scales[] = {1, 2, 3, 4, 6};
  const int scale = scales[rng() % 5];
  switch (rng() % 6) {
    case 0: {
      const GroupPtr g = s3();
      const std::vector<std::vector<Element>> subs{{0}, generated(*g, {1}), generated(*g, {2}), generated(*g, {1, 2})};
      return induced_family(g, TwoCocycle::trivial(g), subs[rng() % subs.size()], scale, rng);
    }
    case 1: {
      const GroupPtr g = v4();
      const std::vector<std::vector<Element>> subs{{0}, {0, v4_index(1, 0)}, {0, 1, 2, 3}};
      return induced_family(g, v4_cocycle(g), subs[rng() % subs.size()], scale, rng);
    }
    case 2: {
      const GroupPtr g = d4();
      const TwoCocycle a = d4_projective(g);
      const auto sub = generated(*g, {static_cast<Element>(1 + rng() % 7)});
      return induced_family(g, a, sub, scale, rng);
    }
    case 3: {
      const GroupPtr g = zn_x_zn(3);
      return induced_family(g, bilinear(g, 3, 3), {0, 3, 6}, scale, rng);
    }
    case 4: {
      const GroupPtr g = z(4);
      return induced_family(g, twist(TwoCocycle::trivial(g), rng), generated(*g, {2}), scale, rng);
    }
    default: {
      const GroupPtr g = s3();
      return induced_family(g, twist(TwoCocycle::trivial(g), rng), {0}, scale, rng);
    }
  }
}

ExactModule random_module(const TwoCocycle& beta, Rng& rng) {
  const auto pieces = twisted_regular(beta);
  const int n = beta.group()->order();
  const int copies = 1 + static_cast<int>(rng() % 2);
  const int dim = n * copies;
  const CycMatrix b = random_orthogonal(dim, rng);
  const CycMatrix bi = b.transpose();
  ExactModule m{dim, {}};
  for (const auto& p : pieces) {
    CycMatrix big(dim, dim);
    for (int c = 0; c < copies; ++c) big.set_block(c * n, c * n, p);
    m.action.push_back(b * big * bi);
  }
  return m;
}

}  // namespace fixtures
