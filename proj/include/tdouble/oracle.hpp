#pragma once

#include <complex>
#include <utility>
#include <vector>

namespace tdouble::oracle {

// Brute-force reference computations on raw tables. They take plain arrays
// and never call into the algebra code, so they can cross-check it.

/// Multiplication table (row-major, n x n) and cocycle exponents k(x,y) with
/// alpha(x,y) = exp(2 pi i k / conductor).
struct RawTwisted {
  int order = 0;
  int conductor = 1;
  std::vector<int> mul;
  std::vector<long> exps;
};

/// A right action table (size x order) and exponents indexed (s*n + x)*n + y.
struct RawDouble {
  int order = 0;
  int set_size = 0;
  int conductor = 1;
  std::vector<int> mul;
  std::vector<int> action;
  std::vector<long> exps;
};

/// Exhaustive associativity of basis triples, exact modular arithmetic.
bool tga_associative(const RawTwisted& a);
bool double_associative(const RawDouble& d);

/// g is regular when alpha(g,x) = alpha(x,g) for every x commuting with g.
std::vector<bool> regular_elements(const RawTwisted& a);
/// Number of conjugacy classes made of regular elements (found by orbit chasing).
int regular_class_count(const RawTwisted& a);
/// True when every class is uniformly regular or uniformly not.
bool regularity_is_class_function(const RawTwisted& a);

/// Dimension of {x : x b = b x for all basis b}, numerically.
int center_dimension(const RawTwisted& a);
int center_dimension(const RawDouble& d);

/// dim A - dim [A, A]: the number of simple modules of a semisimple algebra.
int simple_count(const RawTwisted& a);

using SparseRow = std::vector<std::pair<int, std::complex<double>>>;

/// Numerical rank with a relative threshold.
int numeric_rank(const std::vector<SparseRow>& rows, int cols);

}  // namespace tdouble::oracle
