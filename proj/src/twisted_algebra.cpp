#include "tdouble/twisted_algebra.hpp"

#include <stdexcept>

#include "tdouble/error.hpp"

namespace tdouble {

TwistedGroupAlgebra::TwistedGroupAlgebra(TwoCocycle alpha) : alpha_(std::move(alpha)) {
  const auto check = validate_cocycle(alpha_);
  if (!check.valid) throw Error(ErrorCode::InvalidCocycle, check.violation);
  const int n = dim();
  values_.reserve(static_cast<std::size_t>(n) * n);
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) values_.emplace_back(alpha_.value(x, y));
  }
}

StructureConstants TwistedGroupAlgebra::structure() const {
  const FiniteGroup& g = group();
  StructureConstants s;
  s.dim = dim();
  s.product.resize(static_cast<std::size_t>(s.dim) * s.dim);
  s.coefficient = values_;
  for (Element x = 0; x < s.dim; ++x) {
    for (Element y = 0; y < s.dim; ++y) s.product[static_cast<std::size_t>(x) * s.dim + y] = g.mul(x, y);
  }
  s.identity = {g.identity()};
  for (Element x : generators(g)) s.generators.push_back({x});
  return s;
}

AlgebraElement AlgebraElement::zero(const TwistedGroupAlgebra& a) {
  return AlgebraElement{&a, std::vector<Cyc>(a.dim())};
}

AlgebraElement AlgebraElement::basis(const TwistedGroupAlgebra& a, Element g, const Cyc& c) {
  AlgebraElement e = zero(a);
  e.coeffs[g] = c;
  return e;
}

bool AlgebraElement::is_zero() const {
  for (const auto& c : coeffs) {
    if (!c.is_zero()) return false;
  }
  return true;
}

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& other) {
  if (algebra != other.algebra) throw Error(ErrorCode::MismatchedAlgebra, "elements of different algebras");
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (!other.coeffs[i].is_zero()) coeffs[i] += other.coeffs[i];
  }
  return *this;
}

AlgebraElement& AlgebraElement::operator-=(const AlgebraElement& other) {
  if (algebra != other.algebra) throw Error(ErrorCode::MismatchedAlgebra, "elements of different algebras");
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (!other.coeffs[i].is_zero()) coeffs[i] -= other.coeffs[i];
  }
  return *this;
}

AlgebraElement& AlgebraElement::operator*=(const Cyc& s) {
  for (auto& c : coeffs) {
    if (!c.is_zero()) c *= s;
  }
  return *this;
}

bool operator==(const AlgebraElement& a, const AlgebraElement& b) {
  return a.algebra == b.algebra && a.coeffs == b.coeffs;
}

AlgebraElement tga_multiply(const AlgebraElement& a, const AlgebraElement& b) {
  if (a.algebra == nullptr || a.algebra != b.algebra) {
    throw Error(ErrorCode::MismatchedAlgebra, "cannot multiply elements of different algebras");
  }
  const TwistedGroupAlgebra& alg = *a.algebra;
  const FiniteGroup& g = alg.group();
  AlgebraElement out = AlgebraElement::zero(alg);
  for (Element x = 0; x < alg.dim(); ++x) {
    if (a.coeffs[x].is_zero()) continue;
    for (Element y = 0; y < alg.dim(); ++y) {
      if (b.coeffs[y].is_zero()) continue;
      out.coeffs[g.mul(x, y)] += a.coeffs[x] * b.coeffs[y] * alg.alpha(x, y);
    }
  }
  return out;
}

AlgebraElement basis_inverse(const TwistedGroupAlgebra& a, Element g) {
  const Element gi = a.group().inv(g);
  return AlgebraElement::basis(a, gi, a.alpha(gi, g).inverse());
}

bool is_central(const AlgebraElement& x) {
  const TwistedGroupAlgebra& a = *x.algebra;
  for (Element g = 0; g < a.dim(); ++g) {
    const AlgebraElement b = AlgebraElement::basis(a, g);
    if (!(tga_multiply(x, b) == tga_multiply(b, x))) return false;
  }
  return true;
}

std::vector<AlgebraElement> center_basis(const TwistedGroupAlgebra& a) {
  const FiniteGroup& g = a.group();
  std::vector<AlgebraElement> out;
  for (const auto& cls : alpha_regular_classes(a.cocycle()).classes) {
    const Element rep = cls.representative;
    const auto cent = centralizer(g, rep);
    AlgebraElement z = AlgebraElement::zero(a);
    const AlgebraElement gbar = AlgebraElement::basis(a, rep);
    for (Element t : left_transversal(g, cent).reps) {
      z += tga_multiply(tga_multiply(AlgebraElement::basis(a, t), gbar), basis_inverse(a, t));
    }
    out.push_back(std::move(z));
  }
  CycMatrix coeffs(static_cast<int>(out.size()), a.dim());
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (!is_central(out[i])) throw std::logic_error("center_basis produced a non-central element");
    for (int j = 0; j < a.dim(); ++j) coeffs(static_cast<int>(i), j) = out[i].coeffs[j];
  }
  if (rank(coeffs) != static_cast<int>(out.size())) {
    throw std::logic_error("center_basis produced dependent elements");
  }
  return out;
}

ExactModule regular_representation(const TwistedGroupAlgebra& a) {
  const FiniteGroup& g = a.group();
  const int n = a.dim();
  ExactModule m{n, {}};
  m.action.reserve(n);
  for (Element x = 0; x < n; ++x) {
    CycMatrix l(n, n);
    for (Element y = 0; y < n; ++y) l(g.mul(x, y), y) = a.alpha(x, y);
    m.action.push_back(std::move(l));
  }
  return m;
}

CycMatrix trace_form(const TwistedGroupAlgebra& a) {
  const ExactModule reg = regular_representation(a);
  const int n = a.dim();
  CycMatrix t(n, n);
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      Cyc tr;
      for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
          const Cyc& u = reg.action[x](i, j);
          if (u.is_zero()) continue;
          const Cyc& v = reg.action[y](j, i);
          if (!v.is_zero()) tr += u * v;
        }
      }
      t(x, y) = tr;
    }
  }
  return t;
}

bool is_semisimple(const TwistedGroupAlgebra& a) { return rank(trace_form(a)) == a.dim(); }

}  // namespace tdouble
