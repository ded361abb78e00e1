#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "tdouble/cocycle.hpp"
#include "tdouble/double.hpp"
#include "tdouble/dual_pair.hpp"
#include "tdouble/group.hpp"
#include "tdouble/oracle.hpp"
#include "tdouble/twisted_algebra.hpp"

namespace fixtures {

using namespace tdouble;
using Rng = std::mt19937_64;

GroupPtr share(FiniteGroup g);
GSetPtr share(RightGSet s);

GroupPtr trivial_group();
GroupPtr z(int n);
/// (0 1), (0 1 2) in S3; 3 classes of sizes 1, 3, 2.
GroupPtr s3();
/// Z2 x Z2 with (a1, a2) at index 2*a1 + a2.
GroupPtr v4();
inline Element v4_index(int a1, int a2) { return 2 * a1 + a2; }
GroupPtr d4();
GroupPtr q8();
GroupPtr a4();
GroupPtr s4();
GroupPtr zn_x_zn(int n);

/// alpha((a1,a2),(b1,b2)) = (-1)^{a2 b1} on v4().
TwoCocycle v4_cocycle(const GroupPtr& v4);
/// zeta_g^{k a2 b1} on direct_product(Z_m, Z_n), g = gcd(m, n).
TwoCocycle bilinear(const GroupPtr& g, int m, int n, int k = 1);
/// (-1)^{a2 b1} pulled back along S3 x V4 -> V4.
TwoCocycle s3_x_v4_inflated(const GroupPtr& g);
/// The sign cocycle of a projective 2-dim action of D4 lifted from D8.
TwoCocycle d4_projective(const GroupPtr& d4);

Coboundary random_coboundary(const FiniteGroup& g, int conductor, Rng& rng);
SetCoboundary random_set_coboundary(int set_size, const FiniteGroup& g, int conductor, Rng& rng);
TwoCocycle twist(const TwoCocycle& alpha, Rng& rng);

struct CocycleCase {
  std::string name;
  TwoCocycle alpha;
};

/// Twenty or more (group, cocycle) pairs of order at most 24, some twisted
/// by random coboundaries.
std::vector<CocycleCase> cocycle_zoo(std::uint64_t seed);

/// Z2 swapping two points.
GSetPtr swap_set(const FiniteGroup& z2);
/// Points 0..n-1 of a permutation group, s.g = g(s).
GSetPtr natural_set(const FiniteGroup& g);
GSetPtr disjoint_union(const FiniteGroup& g, const std::vector<GSetPtr>& parts);

/// alpha_s = alpha_O on each orbit O, composed with a random set coboundary.
SetCocycle random_set_cocycle(GSetPtr set, const std::vector<TwoCocycle>& pool, int conductor, Rng& rng);

struct DoubleCase {
  std::string name;
  SetCocycle alpha;
};

/// Randomized valid set cocycles over a spread of groups and G-sets.
std::vector<DoubleCase> double_zoo(std::uint64_t seed, int count);

oracle::RawTwisted raw(const TwoCocycle& alpha);
oracle::RawDouble raw(const SetCocycle& alpha);

/// Subgroup generated by the given elements.
std::vector<Element> generated(const FiniteGroup& g, const std::vector<Element>& gens);

/// L_h e_k = beta(h,k) e_{hk}: a projective action with cocycle beta.
std::vector<CycMatrix> twisted_regular(const TwoCocycle& beta);
/// X^{a1} Z^{a2} on C^2 over v4().
ProjectiveAction pauli(const GroupPtr& v4);
/// Left regular permutation action.
ProjectiveAction regular_action(const GroupPtr& g);

/// A rational orthogonal matrix, so numeric checks stay well conditioned.
CycMatrix random_orthogonal(int n, Rng& rng);

/// The family over the cosets H\G, phi_i(x) = pi(r_j x r_i^{-1}) with
/// j = i.x^{-1}, where pi is the twisted regular action of H for alpha
/// restricted to H. Randomized by root-of-unity scalings (conductor
/// `scale_conductor`) and rational orthogonal basis changes.
StableFamily induced_family(const GroupPtr& g, const TwoCocycle& alpha, const std::vector<Element>& h,
                            int scale_conductor, Rng& rng, bool randomize = true);

/// A random family over a group from a small pool.
StableFamily random_family(Rng& rng);

/// Random exact module over C^beta[H]: a direct sum of twisted regular
/// pieces conjugated by a random basis change.
ExactModule random_module(const TwoCocycle& beta, Rng& rng);

}  // namespace fixtures
