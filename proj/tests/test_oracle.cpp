#include <doctest.h>

#include "fixtures.hpp"

using namespace tdouble;
using namespace fixtures;
using oracle::RawDouble;
using oracle::RawTwisted;

namespace {

RawTwisted cyclic(int n) {
  RawTwisted a;
  a.order = n;
  a.mul.resize(n * n);
  a.exps.assign(n * n, 0);
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) a.mul[x * n + y] = (x + y) % n;
  }
  return a;
}

// Klein four with (a1, a2) at 2*a1 + a2 and alpha = (-1)^{a2 b1}.
RawTwisted klein(bool twisted) {
  RawTwisted a;
  a.order = 4;
  a.conductor = 2;
  for (int x = 0; x < 4; ++x) {
    for (int y = 0; y < 4; ++y) {
      a.mul.push_back(x ^ y);
      a.exps.push_back(twisted ? (x & 1) * (y >> 1) : 0);
    }
  }
  return a;
}

}  // namespace

TEST_CASE("hand tables") {
  const RawTwisted z3 = cyclic(3);
  CHECK(oracle::tga_associative(z3));
  CHECK(oracle::regular_class_count(z3) == 3);
  CHECK(oracle::center_dimension(z3) == 3);
  CHECK(oracle::simple_count(z3) == 3);

  const RawTwisted plain = klein(false);
  const RawTwisted twisted = klein(true);
  CHECK(oracle::tga_associative(twisted));
  CHECK(oracle::regular_class_count(plain) == 4);
  CHECK(oracle::regular_elements(twisted) == std::vector<bool>{true, false, false, false});
  CHECK(oracle::regular_class_count(twisted) == 1);
  CHECK(oracle::regularity_is_class_function(twisted));
  CHECK(oracle::center_dimension(twisted) == 1);
  CHECK(oracle::simple_count(twisted) == 1);

  RawTwisted broken = twisted;
  broken.exps[1 * 4 + 2] ^= 1;
  CHECK(!oracle::tga_associative(broken));
}

TEST_CASE("raw doubles") {
  // Z2 swapping two points with trivial cocycle: the 2x2 matrix algebra.
  RawDouble d;
  d.order = 2;
  d.set_size = 2;
  d.mul = {0, 1, 1, 0};
  d.action = {0, 1, 1, 0};
  d.exps.assign(2 * 2 * 2, 0);
  CHECK(oracle::double_associative(d));
  CHECK(oracle::center_dimension(d) == 1);
  // Trivial action on two points: two copies of C[Z2].
  d.action = {0, 0, 1, 1};
  CHECK(oracle::double_associative(d));
  CHECK(oracle::center_dimension(d) == 4);
}

TEST_CASE("numeric rank") {
  std::vector<oracle::SparseRow> rows{{{0, 1.0}, {1, 2.0}}, {{0, 2.0}, {1, 4.0}}, {{2, 1.0}}};
  CHECK(oracle::numeric_rank(rows, 3) == 2);
  CHECK(oracle::numeric_rank({}, 3) == 0);
  rows.push_back({{1, 1e-3}});
  CHECK(oracle::numeric_rank(rows, 3) == 3);
}

TEST_CASE("agreement with the library on the zoo") {
  for (const auto& c : cocycle_zoo(51)) {
    INFO(c.name);
    const RawTwisted r = raw(c.alpha);
    CHECK(oracle::regularity_is_class_function(r));
    const int classes = static_cast<int>(alpha_regular_classes(c.alpha).classes.size());
    CHECK(oracle::regular_class_count(r) == classes);
    CHECK(oracle::simple_count(r) == classes);
    const auto reg = oracle::regular_elements(r);
    for (Element g = 0; g < c.alpha.group()->order(); ++g) CHECK(reg[g] == is_alpha_regular(c.alpha, g));
  }
}
