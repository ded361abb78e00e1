#include "tdouble/double.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "tdouble/error.hpp"

namespace tdouble {

namespace {

std::vector<int> support(const std::vector<Cyc>& v) {
  std::vector<int> out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!v[i].is_zero()) out.push_back(static_cast<int>(i));
  }
  return out;
}

}  // namespace

GeneralizedDouble::GeneralizedDouble(SetCocycle alpha) : alpha_(std::move(alpha)) {
  const auto check = validate_cocycle(alpha_);
  if (!check.valid) throw Error(ErrorCode::InvalidCocycle, check.violation);
  const int n = group().order();
  values_.reserve(static_cast<std::size_t>(set_size()) * n * n);
  for (int s = 0; s < set_size(); ++s) {
    for (Element x = 0; x < n; ++x) {
      for (Element y = 0; y < n; ++y) values_.emplace_back(alpha_.value(s, x, y));
    }
  }
}

StructureConstants GeneralizedDouble::structure() const {
  const FiniteGroup& g = group();
  StructureConstants a;
  a.dim = dim();
  a.product.assign(static_cast<std::size_t>(a.dim) * a.dim, -1);
  a.coefficient.assign(static_cast<std::size_t>(a.dim) * a.dim, Cyc());
  for (int i = 0; i < a.dim; ++i) {
    const Element x = element_of(i);
    const int s = point_of(i);
    for (Element y = 0; y < g.order(); ++y) {
      const int t = gset().act(s, y);
      const int j = index(y, t);
      const std::size_t k = static_cast<std::size_t>(i) * a.dim + j;
      a.product[k] = index(g.mul(x, y), t);
      a.coefficient[k] = alpha(t, x, y);
    }
  }
  for (int t = 0; t < set_size(); ++t) a.identity.push_back(index(g.identity(), t));
  for (Element x : generators(g)) {
    std::vector<int> sum;
    for (int u = 0; u < set_size(); ++u) sum.push_back(index(x, u));
    a.generators.push_back(std::move(sum));
  }
  for (int t = 0; t < set_size(); ++t) a.generators.push_back({index(g.identity(), t)});
  return a;
}

DoubleElement DoubleElement::zero(const GeneralizedDouble& d) { return DoubleElement{&d, std::vector<Cyc>(d.dim())}; }

DoubleElement DoubleElement::basis(const GeneralizedDouble& d, Element g, int s, const Cyc& c) {
  DoubleElement e = zero(d);
  e.coeffs[d.index(g, s)] = c;
  return e;
}

bool DoubleElement::is_zero() const {
  return std::all_of(coeffs.begin(), coeffs.end(), [](const Cyc& c) { return c.is_zero(); });
}

DoubleElement& DoubleElement::operator+=(const DoubleElement& other) {
  if (algebra != other.algebra) throw Error(ErrorCode::MismatchedAlgebra, "elements of different doubles");
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (!other.coeffs[i].is_zero()) coeffs[i] += other.coeffs[i];
  }
  return *this;
}

DoubleElement& DoubleElement::operator-=(const DoubleElement& other) {
  if (algebra != other.algebra) throw Error(ErrorCode::MismatchedAlgebra, "elements of different doubles");
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (!other.coeffs[i].is_zero()) coeffs[i] -= other.coeffs[i];
  }
  return *this;
}

DoubleElement& DoubleElement::operator*=(const Cyc& s) {
  for (auto& c : coeffs) {
    if (!c.is_zero()) c *= s;
  }
  return *this;
}

bool operator==(const DoubleElement& a, const DoubleElement& b) {
  return a.algebra == b.algebra && a.coeffs == b.coeffs;
}

DoubleElement double_multiply(const DoubleElement& a, const DoubleElement& b) {
  if (a.algebra == nullptr || a.algebra != b.algebra) {
    throw Error(ErrorCode::MismatchedAlgebra, "cannot multiply elements of different doubles");
  }
  const GeneralizedDouble& d = *a.algebra;
  const FiniteGroup& g = d.group();
  DoubleElement out = DoubleElement::zero(d);
  const auto sb = support(b.coeffs);
  for (int i : support(a.coeffs)) {
    const Element x = d.element_of(i);
    const int s = d.point_of(i);
    for (int j : sb) {
      const Element y = d.element_of(j);
      const int t = d.point_of(j);
      if (d.gset().act(s, y) != t) continue;
      out.coeffs[d.index(g.mul(x, y), t)] += a.coeffs[i] * b.coeffs[j] * d.alpha(t, x, y);
    }
  }
  return out;
}

DoubleElement double_identity(const GeneralizedDouble& d) {
  DoubleElement e = DoubleElement::zero(d);
  for (int t = 0; t < d.set_size(); ++t) e.coeffs[d.index(d.group().identity(), t)] = Cyc(1);
  return e;
}

DoubleElement orbit_identity(const GeneralizedDouble& d, int s) {
  DoubleElement e = DoubleElement::zero(d);
  for (int t : orbit_stabilizer(d.gset(), d.group(), s).orbit) e.coeffs[d.index(d.group().identity(), t)] = Cyc(1);
  return e;
}

// --------------------------------------------------------- cohomologous iso

DoubleElement CohomologousIso::apply(const GeneralizedDouble& target, const DoubleElement& x) const {
  DoubleElement out = DoubleElement::zero(target);
  for (std::size_t i = 0; i < x.coeffs.size(); ++i) {
    if (!x.coeffs[i].is_zero()) out.coeffs[i] = x.coeffs[i] * diagonal[i];
  }
  return out;
}

CohomologousIso cohomologous_iso(const GeneralizedDouble& from, const GeneralizedDouble& to,
                                 const SetCoboundary& lambda) {
  if (from.dim() != to.dim() || !(to.cocycle() == apply_coboundary(from.cocycle(), lambda))) {
    throw Error(ErrorCode::CoboundaryMismatch, "target cocycle is not the source composed with the coboundary");
  }
  CohomologousIso f;
  f.diagonal.resize(from.dim());
  for (int i = 0; i < from.dim(); ++i) {
    f.diagonal[i] = Cyc(lambda.value(from.point_of(i), from.element_of(i)).inverse());
  }
  return f;
}

bool is_algebra_isomorphism(const CohomologousIso& f, const GeneralizedDouble& from, const GeneralizedDouble& to) {
  if (static_cast<int>(f.diagonal.size()) != from.dim() || from.dim() != to.dim()) return false;
  for (const auto& c : f.diagonal) {
    if (c.is_zero()) return false;
  }
  for (int i = 0; i < from.dim(); ++i) {
    const DoubleElement bi = DoubleElement::basis(from, from.element_of(i), from.point_of(i));
    const DoubleElement fi = f.apply(to, bi);
    for (int j = 0; j < from.dim(); ++j) {
      const DoubleElement bj = DoubleElement::basis(from, from.element_of(j), from.point_of(j));
      if (!(f.apply(to, double_multiply(bi, bj)) == double_multiply(fi, f.apply(to, bj)))) return false;
    }
  }
  return true;
}

// ------------------------------------------------------------------ blocks

std::vector<int> stabilizer_subspace(const GeneralizedDouble& d, int s) {
  std::vector<int> out;
  for (Element a = 0; a < d.group().order(); ++a) {
    if (d.gset().act(s, a) == s) out.push_back(d.index(a, s));
  }
  return out;
}

std::vector<int> nilpotent_subspace(const GeneralizedDouble& d, int s) {
  std::vector<int> out;
  for (Element a = 0; a < d.group().order(); ++a) {
    if (d.gset().act(s, a) != s) out.push_back(d.index(a, s));
  }
  return out;
}

std::vector<int> point_subspace(const GeneralizedDouble& d, int s) {
  std::vector<int> out;
  for (Element a = 0; a < d.group().order(); ++a) out.push_back(d.index(a, s));
  return out;
}

BlockDecomposition decompose_blocks(const GeneralizedDouble& d) {
  BlockDecomposition out;
  for (int s : orbit_representatives(d.gset())) {
    auto os = orbit_stabilizer(d.gset(), d.group(), s);
    OrbitBlock b;
    b.representative = s;
    b.orbit = std::move(os.orbit);
    b.stabilizer = std::move(os.stabilizer);
    b.transversal = std::move(os.right_transversal);
    for (int t : b.orbit) {
      for (int i : point_subspace(d, t)) b.basis.push_back(i);
    }
    std::sort(b.basis.begin(), b.basis.end());
    out.orbits.push_back(std::move(b));
  }
  return out;
}

BlockCheck verify_blocks(const GeneralizedDouble& d, const BlockDecomposition& blocks) {
  BlockCheck c;
  const StructureConstants a = d.structure();
  std::vector<int> owner(d.dim(), -1);
  for (std::size_t k = 0; k < blocks.orbits.size(); ++k) {
    for (int i : blocks.orbits[k].basis) {
      if (owner[i] != -1) {
        c.partition = false;
        c.violation = "basis index in two blocks";
      }
      owner[i] = static_cast<int>(k);
    }
  }
  if (std::find(owner.begin(), owner.end(), -1) != owner.end()) {
    c.partition = false;
    c.violation = "basis index in no block";
    return c;
  }
  for (int i = 0; i < d.dim(); ++i) {
    for (int j = 0; j < d.dim(); ++j) {
      const int t = a.target(i, j);
      if (t < 0) continue;
      if (owner[i] != owner[j]) {
        c.cross_orbit_zero = false;
        c.violation = "product across orbit blocks is nonzero";
      }
      if (owner[t] != owner[j] || owner[t] != owner[i]) {
        c.two_sided_ideal = false;
        c.violation = "block is not a two-sided ideal";
      }
    }
  }
  for (int s = 0; s < d.set_size(); ++s) {
    const auto ss = stabilizer_subspace(d, s);
    const std::set<int> sset(ss.begin(), ss.end());
    for (int i : ss) {
      for (int j : ss) {
        const int t = a.target(i, j);
        if (t < 0 || !sset.count(t)) {
          c.stabilizer_closed = false;
          c.violation = "S(s) not closed at s=" + std::to_string(s);
        }
      }
    }
    const auto ns = nilpotent_subspace(d, s);
    for (int j : ns) {
      for (int i : point_subspace(d, s)) {
        if (a.target(i, j) >= 0) {
          c.point_kills_nilpotent = false;
          c.violation = "D(s)N(s) != 0 at s=" + std::to_string(s);
        }
      }
      for (int i : ns) {
        if (a.target(i, j) >= 0) {
          c.nilpotent_square_zero = false;
          c.violation = "N(s)^2 != 0 at s=" + std::to_string(s);
        }
      }
    }
  }
  for (const auto& b : blocks.orbits) {
    const DoubleElement e = orbit_identity(d, b.representative);
    for (int i : b.basis) {
      const DoubleElement x = DoubleElement::basis(d, d.element_of(i), d.point_of(i));
      if (!(double_multiply(e, x) == x) || !(double_multiply(x, e) == x)) {
        c.block_identity = false;
        c.violation = "orbit identity fails at basis index " + std::to_string(i);
      }
    }
  }
  return c;
}

StabilizerIso stabilizer_subalgebra_iso(const GeneralizedDouble& d, int s) {
  StabilizerIso iso{restrict_cocycle(d.cocycle(), s), {}, true};
  const Subgroup& h = iso.restricted.stabilizer;
  const int m = h.group->order();
  for (int a = 0; a < m; ++a) iso.double_index.push_back(d.index(h.to_parent[a], s));
  const StructureConstants st = d.structure();
  for (int a = 0; a < m; ++a) {
    for (int b = 0; b < m; ++b) {
      const int t = st.target(iso.double_index[a], iso.double_index[b]);
      const int ab = h.group->mul(a, b);
      if (t != iso.double_index[ab] ||
          st.coeff(iso.double_index[a], iso.double_index[b]) != Cyc(iso.restricted.cocycle.value(a, b))) {
        iso.multiplicative = false;
      }
    }
  }
  return iso;
}

// ------------------------------------------------------------------ center

bool is_central(const DoubleElement& x) {
  const GeneralizedDouble& d = *x.algebra;
  for (int i = 0; i < d.dim(); ++i) {
    const DoubleElement b = DoubleElement::basis(d, d.element_of(i), d.point_of(i));
    if (!(double_multiply(x, b) == double_multiply(b, x))) return false;
  }
  return true;
}

int span_dimension(const std::vector<std::vector<Cyc>>& vectors, int length) {
  RowReducer r(length);
  for (const auto& v : vectors) r.add_dense_row(v);
  return r.rank();
}

bool zlt_compatible(const GeneralizedDouble& d, const OrbitBlock& block) {
  const FiniteGroup& g = d.group();
  const int s = block.representative;
  const RestrictedCocycle rc = restrict_cocycle(d.cocycle(), s);
  if (!is_normal_cocycle(rc.cocycle)) return false;
  std::vector<Element> regular;
  for (int a = 0; a < rc.stabilizer.group->order(); ++a) {
    if (is_alpha_regular(rc.cocycle, a)) regular.push_back(rc.stabilizer.to_parent[a]);
  }
  const auto& reps = block.transversal.reps;
  for (std::size_t i = 0; i < reps.size(); ++i) {
    const Element gi = reps[i];
    const Element gi_inv = g.inv(gi);
    const int point = block.orbit[i];
    for (std::size_t j = 0; j < reps.size(); ++j) {
      const Element gj = reps[j];
      const Element gj_inv = g.inv(gj);
      for (Element h : block.stabilizer) {
        const Element x1 = g.mul(g.mul(gj_inv, h), gi);  // g_j^{-1} h g_i
        for (Element a : regular) {
          const Element y1 = g.mul(g.mul(gi_inv, a), gi);
          const Element x2 = g.mul(g.mul(gj_inv, g.conjugate(h, a)), gj);
          if (d.cocycle().exponent(point, x1, y1) != d.cocycle().exponent(point, x2, x1)) return false;
        }
      }
    }
  }
  return true;
}

std::vector<std::vector<Cyc>> center_from_structure(const StructureConstants& a) {
  RowReducer reducer(a.dim);
  for (const auto& gen : a.generators) {
    std::map<int, std::map<int, Cyc>> eqs;  // output coordinate -> variable -> coefficient
    for (int i = 0; i < a.dim; ++i) {
      for (int k : gen) {
        const int right = a.target(i, k);  // x_i b_i b_k
        if (right >= 0) eqs[right][i] += a.coeff(i, k);
        const int left = a.target(k, i);
        if (left >= 0) eqs[left][i] -= a.coeff(k, i);
      }
    }
    for (auto& [out, row] : eqs) {
      SparseRow sparse;
      for (auto& [var, c] : row) {
        if (!c.is_zero()) sparse.emplace_back(var, c);
      }
      if (!sparse.empty()) reducer.add_row(sparse);
    }
  }
  return reducer.nullspace();
}

std::vector<DoubleElement> center_by_kernel(const GeneralizedDouble& d) {
  std::vector<DoubleElement> out;
  for (auto& v : center_from_structure(d.structure())) out.push_back(DoubleElement{&d, std::move(v)});
  return out;
}

DoubleCenter double_center_basis(const GeneralizedDouble& d) {
  const FiniteGroup& g = d.group();
  const BlockDecomposition blocks = decompose_blocks(d);
  DoubleCenter out;
  std::vector<DoubleElement> kernel;
  bool kernel_done = false;
  std::vector<int> owner(d.dim(), -1);
  for (std::size_t k = 0; k < blocks.orbits.size(); ++k) {
    for (int i : blocks.orbits[k].basis) owner[i] = static_cast<int>(k);
  }
  for (std::size_t k = 0; k < blocks.orbits.size(); ++k) {
    const OrbitBlock& b = blocks.orbits[k];
    std::vector<DoubleElement> found;
    bool formula = zlt_compatible(d, b);
    if (formula) {
      const RestrictedCocycle rc = restrict_cocycle(d.cocycle(), b.representative);
      for (const auto& cls : alpha_regular_classes(rc.cocycle).classes) {
        DoubleElement z = DoubleElement::zero(d);
        for (Element local : cls.members) {
          const Element a = rc.stabilizer.to_parent[local];
          for (std::size_t i = 0; i < b.transversal.reps.size(); ++i) {
            const Element gi = b.transversal.reps[i];
            z.coeffs[d.index(g.mul(g.mul(g.inv(gi), a), gi), b.orbit[i])] += Cyc(1);
          }
        }
        found.push_back(std::move(z));
      }
      for (const auto& z : found) {
        if (!is_central(z)) formula = false;
      }
    }
    if (!formula) {
      out.warnings.push_back("COMPATIBILITY_FAILED at orbit of " + std::to_string(b.representative) +
                             "; kernel method used");
      if (!kernel_done) {
        kernel = center_by_kernel(d);
        kernel_done = true;
      }
      found.clear();
      for (const auto& z : kernel) {
        const auto supp = support(z.coeffs);
        if (!supp.empty() && owner[supp.front()] == static_cast<int>(k)) found.push_back(z);
      }
    }
    out.orbit_counts.push_back(static_cast<int>(found.size()));
    out.orbit_used_formula.push_back(formula);
    for (auto& z : found) out.elements.push_back(std::move(z));
  }
  const bool all_formula =
      std::all_of(out.orbit_used_formula.begin(), out.orbit_used_formula.end(), [](bool f) { return f; });
  out.path = all_formula ? "formula" : "kernel";
  std::vector<std::vector<Cyc>> vecs;
  for (const auto& z : out.elements) vecs.push_back(z.coeffs);
  if (span_dimension(vecs, d.dim()) != static_cast<int>(out.elements.size())) {
    throw std::logic_error("double_center_basis produced dependent elements");
  }
  return out;
}

}  // namespace tdouble
