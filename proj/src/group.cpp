#include "tdouble/group.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <sstream>

#include "tdouble/error.hpp"

namespace tdouble {

namespace {

[[noreturn]] void invalid(const std::string& what) { throw Error(ErrorCode::InvalidGroup, what); }

}  // namespace

FiniteGroup FiniteGroup::from_table(const std::vector<std::vector<int>>& table, int max_order) {
  const int n = static_cast<int>(table.size());
  if (n == 0) invalid("empty multiplication table");
  if (n > max_order) invalid("group order " + std::to_string(n) + " exceeds limit " + std::to_string(max_order));
  FiniteGroup g;
  g.order_ = n;
  g.mul_.resize(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a) {
    if (static_cast<int>(table[a].size()) != n) invalid("row " + std::to_string(a) + " has wrong length");
    for (int b = 0; b < n; ++b) {
      const int c = table[a][b];
      if (c < 0 || c >= n) invalid("table entry out of range at (" + std::to_string(a) + "," + std::to_string(b) + ")");
      g.mul_[static_cast<std::size_t>(a) * n + b] = c;
    }
  }
  int identity = -1;
  for (int e = 0; e < n && identity < 0; ++e) {
    bool ok = true;
    for (int a = 0; a < n && ok; ++a) ok = g.mul(e, a) == a && g.mul(a, e) == a;
    if (ok) identity = e;
  }
  if (identity < 0) invalid("no two-sided identity");
  g.identity_ = identity;
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      for (int c = 0; c < n; ++c) {
        if (g.mul(g.mul(a, b), c) != g.mul(a, g.mul(b, c))) {
          invalid("not associative at (" + std::to_string(a) + "," + std::to_string(b) + "," +
                  std::to_string(c) + ")");
        }
      }
    }
  }
  g.inv_.assign(n, -1);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (g.mul(a, b) == identity && g.mul(b, a) == identity) {
        g.inv_[a] = b;
        break;
      }
    }
    if (g.inv_[a] < 0) invalid("element " + std::to_string(a) + " has no inverse");
  }
  return g;
}

FiniteGroup FiniteGroup::from_permutations(const std::vector<std::vector<int>>& generators, int max_order) {
  std::size_t degree = 0;
  for (const auto& p : generators) degree = std::max(degree, p.size());
  auto normalize = [degree](std::vector<int> p) {
    const std::size_t old = p.size();
    p.resize(degree);
    for (std::size_t i = old; i < degree; ++i) p[i] = static_cast<int>(i);
    return p;
  };
  std::vector<std::vector<int>> gens;
  for (const auto& p : generators) {
    auto q = normalize(p);
    std::vector<int> seen(degree, 0);
    for (int x : q) {
      if (x < 0 || static_cast<std::size_t>(x) >= degree || seen[x]++) invalid("generator is not a permutation");
    }
    gens.push_back(std::move(q));
  }
  auto compose = [](const std::vector<int>& g, const std::vector<int>& h) {
    std::vector<int> out(g.size());
    for (std::size_t i = 0; i < g.size(); ++i) out[i] = h[g[i]];
    return out;
  };
  std::vector<int> id(degree);
  for (std::size_t i = 0; i < degree; ++i) id[i] = static_cast<int>(i);
  std::vector<std::vector<int>> elements{id};
  std::map<std::vector<int>, int> index{{id, 0}};
  for (std::size_t head = 0; head < elements.size(); ++head) {
    for (const auto& gen : gens) {
      auto p = compose(elements[head], gen);
      if (index.count(p)) continue;
      if (static_cast<int>(elements.size()) >= max_order) {
        invalid("permutation group exceeds order limit " + std::to_string(max_order));
      }
      index.emplace(p, static_cast<int>(elements.size()));
      elements.push_back(std::move(p));
    }
  }
  const int n = static_cast<int>(elements.size());
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) table[a][b] = index.at(compose(elements[a], elements[b]));
  }
  FiniteGroup g = from_table(table, max_order);
  g.perms_ = std::move(elements);
  return g;
}

std::vector<ConjugacyClass> conjugacy_classes(const FiniteGroup& g) {
  std::vector<ConjugacyClass> classes;
  std::vector<bool> done(g.order(), false);
  for (Element a = 0; a < g.order(); ++a) {
    if (done[a]) continue;
    ConjugacyClass c;
    c.representative = a;
    for (Element x = 0; x < g.order(); ++x) {
      const Element b = g.conjugate(x, a);
      if (!done[b]) {
        done[b] = true;
        c.members.push_back(b);
      }
    }
    std::sort(c.members.begin(), c.members.end());
    classes.push_back(std::move(c));
  }
  return classes;
}

std::vector<Element> centralizer(const FiniteGroup& group, Element g) {
  std::vector<Element> out;
  for (Element x = 0; x < group.order(); ++x) {
    if (group.mul(x, g) == group.mul(g, x)) out.push_back(x);
  }
  return out;
}

bool is_subgroup(const FiniteGroup& group, std::span<const Element> elements) {
  if (elements.empty()) return false;
  std::vector<bool> in(group.order(), false);
  for (Element e : elements) {
    if (e < 0 || e >= group.order()) return false;
    in[e] = true;
  }
  if (!in[group.identity()]) return false;
  for (Element a : elements) {
    if (!in[group.inv(a)]) return false;
    for (Element b : elements) {
      if (!in[group.mul(a, b)]) return false;
    }
  }
  return true;
}

namespace {

CosetTransversal transversal(const FiniteGroup& group, std::span<const Element> subgroup, bool left) {
  if (!is_subgroup(group, subgroup)) throw Error(ErrorCode::NotSubgroup, "element list is not a subgroup");
  CosetTransversal t;
  t.subgroup.assign(subgroup.begin(), subgroup.end());
  std::sort(t.subgroup.begin(), t.subgroup.end());
  t.subgroup.erase(std::unique(t.subgroup.begin(), t.subgroup.end()), t.subgroup.end());
  std::vector<bool> covered(group.order(), false);
  auto take = [&](Element r) {
    t.reps.push_back(r);
    for (Element h : t.subgroup) covered[left ? group.mul(r, h) : group.mul(h, r)] = true;
  };
  take(group.identity());
  for (Element g = 0; g < group.order(); ++g) {
    if (!covered[g]) take(g);
  }
  return t;
}

}  // namespace

CosetTransversal left_transversal(const FiniteGroup& group, std::span<const Element> subgroup) {
  return transversal(group, subgroup, true);
}

CosetTransversal right_transversal(const FiniteGroup& group, std::span<const Element> subgroup) {
  return transversal(group, subgroup, false);
}

Subgroup make_subgroup(const FiniteGroup& parent, std::span<const Element> elements) {
  if (!is_subgroup(parent, elements)) throw Error(ErrorCode::NotSubgroup, "element list is not a subgroup");
  Subgroup s;
  s.to_parent.assign(elements.begin(), elements.end());
  std::sort(s.to_parent.begin(), s.to_parent.end());
  s.to_parent.erase(std::unique(s.to_parent.begin(), s.to_parent.end()), s.to_parent.end());
  s.from_parent.assign(parent.order(), -1);
  for (std::size_t i = 0; i < s.to_parent.size(); ++i) s.from_parent[s.to_parent[i]] = static_cast<int>(i);
  const int n = static_cast<int>(s.to_parent.size());
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) table[a][b] = s.from_parent[parent.mul(s.to_parent[a], s.to_parent[b])];
  }
  s.group = std::make_shared<const FiniteGroup>(FiniteGroup::from_table(table, std::max(n, 1)));
  return s;
}

std::vector<Element> generators(const FiniteGroup& group) {
  std::vector<Element> gens;
  std::vector<bool> in(group.order(), false);
  in[group.identity()] = true;
  for (Element g = 0; g < group.order(); ++g) {
    if (in[g]) continue;
    gens.push_back(g);
    std::vector<Element> members{group.identity()};
    std::fill(in.begin(), in.end(), false);
    in[group.identity()] = true;
    for (std::size_t head = 0; head < members.size(); ++head) {
      for (Element x : gens) {
        const Element y = group.mul(members[head], x);
        if (!in[y]) {
          in[y] = true;
          members.push_back(y);
        }
      }
    }
  }
  return gens;
}

// ------------------------------------------------------------------ RightGSet

RightGSet RightGSet::from_table(const FiniteGroup& group, const std::vector<std::vector<int>>& action) {
  RightGSet s;
  s.size_ = static_cast<int>(action.size());
  s.order_ = group.order();
  if (s.size_ == 0) throw Error(ErrorCode::InvalidGSet, "G-set is empty");
  s.action_.resize(static_cast<std::size_t>(s.size_) * s.order_);
  for (int x = 0; x < s.size_; ++x) {
    if (static_cast<int>(action[x].size()) != s.order_) {
      throw Error(ErrorCode::InvalidGSet, "G-set row " + std::to_string(x) + " must have |G| entries");
    }
    for (int g = 0; g < s.order_; ++g) {
      const int y = action[x][g];
      if (y < 0 || y >= s.size_) throw Error(ErrorCode::InvalidGSet, "G-set entry out of range");
      s.action_[static_cast<std::size_t>(x) * s.order_ + g] = y;
    }
  }
  for (int x = 0; x < s.size_; ++x) {
    if (s.act(x, group.identity()) != x) {
      throw Error(ErrorCode::InvalidGSet, "identity does not fix point " + std::to_string(x));
    }
    for (int g = 0; g < s.order_; ++g) {
      for (int h = 0; h < s.order_; ++h) {
        if (s.act(s.act(x, g), h) != s.act(x, group.mul(g, h))) {
          throw Error(ErrorCode::InvalidGSet, "(s.g).h != s.(gh) at s=" + std::to_string(x) +
                                                  " g=" + std::to_string(g) + " h=" + std::to_string(h));
        }
      }
    }
  }
  return s;
}

RightGSet RightGSet::trivial(const FiniteGroup& group, int size) {
  std::vector<std::vector<int>> action(size, std::vector<int>(group.order()));
  for (int s = 0; s < size; ++s) std::fill(action[s].begin(), action[s].end(), s);
  return from_table(group, action);
}

RightGSet RightGSet::regular(const FiniteGroup& group) {
  std::vector<std::vector<int>> action(group.order(), std::vector<int>(group.order()));
  for (int s = 0; s < group.order(); ++s) {
    for (int g = 0; g < group.order(); ++g) action[s][g] = group.mul(s, g);
  }
  return from_table(group, action);
}

RightGSet RightGSet::cosets(const FiniteGroup& group, std::span<const Element> subgroup) {
  const CosetTransversal t = right_transversal(group, subgroup);
  std::vector<int> label(group.order(), -1);
  for (std::size_t i = 0; i < t.reps.size(); ++i) {
    for (Element h : t.subgroup) label[group.mul(h, t.reps[i])] = static_cast<int>(i);
  }
  std::vector<std::vector<int>> action(t.reps.size(), std::vector<int>(group.order()));
  for (std::size_t i = 0; i < t.reps.size(); ++i) {
    for (int g = 0; g < group.order(); ++g) action[i][g] = label[group.mul(t.reps[i], g)];
  }
  return from_table(group, action);
}

OrbitStabilizer orbit_stabilizer(const RightGSet& set, const FiniteGroup& group, int s) {
  OrbitStabilizer out;
  for (Element g = 0; g < group.order(); ++g) {
    if (set.act(s, g) == s) out.stabilizer.push_back(g);
  }
  out.right_transversal = right_transversal(group, out.stabilizer);
  for (Element g : out.right_transversal.reps) out.orbit.push_back(set.act(s, g));
  return out;
}

std::vector<int> orbit_representatives(const RightGSet& set) {
  std::vector<int> reps;
  std::vector<bool> seen(set.size(), false);
  for (int s = 0; s < set.size(); ++s) {
    if (seen[s]) continue;
    reps.push_back(s);
    for (int g = 0; g < set.group_order(); ++g) seen[set.act(s, g)] = true;
  }
  return reps;
}

// ------------------------------------------------------------ standard groups

FiniteGroup cyclic_group(int n) {
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) t[a][b] = (a + b) % n;
  }
  return FiniteGroup::from_table(t, std::max(n, kDefaultMaxOrder));
}

FiniteGroup symmetric_group(int n) {
  if (n <= 1) return cyclic_group(1);
  std::vector<int> swap(n);
  std::vector<int> cycle(n);
  for (int i = 0; i < n; ++i) {
    swap[i] = i;
    cycle[i] = (i + 1) % n;
  }
  std::swap(swap[0], swap[1]);
  int factorial = 1;
  for (int i = 2; i <= n; ++i) factorial *= i;
  return FiniteGroup::from_permutations({swap, cycle}, std::max(factorial, kDefaultMaxOrder));
}

FiniteGroup dihedral_group(int n) {
  std::vector<int> rot(n);
  std::vector<int> ref(n);
  for (int i = 0; i < n; ++i) {
    rot[i] = (i + 1) % n;
    ref[i] = (n - i) % n;
  }
  return FiniteGroup::from_permutations({rot, ref}, std::max(2 * n, kDefaultMaxOrder));
}

FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b) {
  const int n = a.order() * b.order();
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      const int xa = x / b.order(), xb = x % b.order();
      const int ya = y / b.order(), yb = y % b.order();
      t[x][y] = a.mul(xa, ya) * b.order() + b.mul(xb, yb);
    }
  }
  return FiniteGroup::from_table(t, std::max(n, kDefaultMaxOrder));
}

std::vector<int> parse_cycles(const std::string& text, int degree) {
  std::vector<std::vector<int>> cycles;
  std::size_t i = 0;
  int max_point = degree - 1;
  while (i < text.size()) {
    const char c = text[i];
    if (c == ' ' || c == '\t' || c == '\r') {
      ++i;
      continue;
    }
    if (c != '(') throw Error(ErrorCode::ParseError, "expected '(' in cycle notation: " + text);
    const auto close = text.find(')', i);
    if (close == std::string::npos) throw Error(ErrorCode::ParseError, "unterminated cycle: " + text);
    std::string body = text.substr(i + 1, close - i - 1);
    for (char& ch : body) {
      if (ch == ',') ch = ' ';
    }
    std::istringstream in(body);
    std::vector<int> cyc;
    std::string tok;
    while (in >> tok) {
      try {
        std::size_t used = 0;
        const int p = std::stoi(tok, &used);
        if (used != tok.size() || p < 0) throw std::invalid_argument(tok);
        cyc.push_back(p);
        max_point = std::max(max_point, p);
      } catch (const std::logic_error&) {
        throw Error(ErrorCode::ParseError, "bad point '" + tok + "' in cycle notation");
      }
    }
    cycles.push_back(std::move(cyc));
    i = close + 1;
  }
  std::vector<int> image(max_point + 1);
  for (int p = 0; p <= max_point; ++p) image[p] = p;
  std::vector<bool> moved(max_point + 1, false);
  for (const auto& cyc : cycles) {
    for (std::size_t k = 0; k < cyc.size(); ++k) {
      if (moved[cyc[k]]) throw Error(ErrorCode::ParseError, "cycles are not disjoint: " + text);
      moved[cyc[k]] = true;
      image[cyc[k]] = cyc[(k + 1) % cyc.size()];
    }
  }
  return image;
}

}  // namespace tdouble
