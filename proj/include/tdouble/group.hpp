#pragma once

#include <memory>
#include <span>
#include <string>
#include <vector>

namespace tdouble {

/// Index of a group element, 0 <= e < order.
using Element = int;

constexpr int kDefaultMaxOrder = 128;

/// A finite group given by its complete multiplication table.
///
/// Construction validates closure, associativity (exhaustively), a two-sided
/// identity and two-sided inverses. Instances are immutable.
class FiniteGroup {
 public:
  /// table[a][b] = a*b.
  static FiniteGroup from_table(const std::vector<std::vector<int>>& table,
                                int max_order = kDefaultMaxOrder);

  /// Closure of permutation generators (images of 0..n-1) by breadth-first
  /// enumeration. Products act left to right: (gh)(i) = h(g(i)).
  /// Element 0 is the identity; later elements follow discovery order.
  static FiniteGroup from_permutations(const std::vector<std::vector<int>>& generators,
                                       int max_order = kDefaultMaxOrder);

  int order() const { return order_; }
  Element identity() const { return identity_; }
  Element mul(Element a, Element b) const { return mul_[static_cast<std::size_t>(a) * order_ + b]; }
  Element inv(Element a) const { return inv_[a]; }
  /// x g x^{-1}
  Element conjugate(Element x, Element g) const { return mul(mul(x, g), inv(x)); }
  std::span<const int> table() const { return mul_; }

  /// Permutation images of each element when built from permutations.
  const std::vector<std::vector<int>>& permutations() const { return perms_; }

 private:
  FiniteGroup() = default;

  int order_ = 0;
  Element identity_ = 0;
  std::vector<int> mul_;
  std::vector<int> inv_;
  std::vector<std::vector<int>> perms_;
};

using GroupPtr = std::shared_ptr<const FiniteGroup>;

struct ConjugacyClass {
  Element representative = 0;
  std::vector<Element> members;  // sorted
};

/// Classes ordered by representative (the smallest member index).
std::vector<ConjugacyClass> conjugacy_classes(const FiniteGroup& g);

/// {x : xg = gx}, sorted.
std::vector<Element> centralizer(const FiniteGroup& group, Element g);

bool is_subgroup(const FiniteGroup& group, std::span<const Element> elements);

struct CosetTransversal {
  std::vector<Element> subgroup;  // sorted
  std::vector<Element> reps;      // reps[0] is the identity
};

/// Representatives t with G = union of t H (left cosets). Greedy by index.
CosetTransversal left_transversal(const FiniteGroup& group, std::span<const Element> subgroup);
/// Representatives g with G = union of H g (right cosets). Greedy by index.
CosetTransversal right_transversal(const FiniteGroup& group, std::span<const Element> subgroup);

/// A subgroup re-indexed as a group in its own right.
struct Subgroup {
  GroupPtr group;                  // local indices 0..|H|-1
  std::vector<Element> to_parent;  // local -> parent, sorted by parent index
  std::vector<int> from_parent;    // parent -> local, -1 when absent
};

Subgroup make_subgroup(const FiniteGroup& parent, std::span<const Element> elements);

/// A small generating set, chosen greedily by element index.
std::vector<Element> generators(const FiniteGroup& group);

/// A finite right G-set: act(s, g) = s.g with s.1 = s and (s.g).h = s.(gh).
class RightGSet {
 public:
  /// action[s][g] = s.g. Validated against the group.
  static RightGSet from_table(const FiniteGroup& group, const std::vector<std::vector<int>>& action);
  static RightGSet trivial(const FiniteGroup& group, int size);
  /// The group acting on itself by right multiplication.
  static RightGSet regular(const FiniteGroup& group);
  /// Right cosets H\G with Hx.g = Hxg, labelled by right_transversal order.
  static RightGSet cosets(const FiniteGroup& group, std::span<const Element> subgroup);

  int size() const { return size_; }
  int group_order() const { return order_; }
  int act(int s, Element g) const { return action_[static_cast<std::size_t>(s) * order_ + g]; }

 private:
  RightGSet() = default;
  int size_ = 0;
  int order_ = 0;
  std::vector<int> action_;
};

using GSetPtr = std::shared_ptr<const RightGSet>;

struct OrbitStabilizer {
  std::vector<int> orbit;              // orbit[i] = s.g_i with g_i = right_transversal.reps[i]
  std::vector<Element> stabilizer;     // sorted
  CosetTransversal right_transversal;  // G = union of G_s g_i, g_1 = 1
};

OrbitStabilizer orbit_stabilizer(const RightGSet& set, const FiniteGroup& group, int s);

/// Orbit representatives (smallest label in each orbit), ascending.
std::vector<int> orbit_representatives(const RightGSet& set);

// Standard groups, used by tests, examples and the CLI.
FiniteGroup cyclic_group(int n);
FiniteGroup symmetric_group(int n);
FiniteGroup dihedral_group(int n);  // order 2n
FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b);  // index a*|B| + b

/// Parse cycle notation such as "(1 2 3)(4 5)" into an image array of the
/// given degree (grown if a point exceeds it).
std::vector<int> parse_cycles(const std::string& text, int degree);

}  // namespace tdouble
