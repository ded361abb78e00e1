#include "tdouble/rep_decomp.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numeric>
#include <optional>
#include <random>
#include <stdexcept>

#include "tdouble/error.hpp"

namespace tdouble {

namespace {

using Eigen::MatrixXcd;
using Cplx = std::complex<double>;

struct Cluster {
  int start = 0;
  int size = 0;
};

// Group sorted eigenvalues. Gaps above `spread` open a new cluster; gaps in
// (spread, 100 * spread) are ambiguous and reported as failure.
std::optional<std::vector<Cluster>> cluster_values(const Eigen::VectorXd& values, double spread) {
  std::vector<Cluster> out;
  if (values.size() == 0) return out;
  out.push_back({0, 1});
  for (int i = 1; i < values.size(); ++i) {
    const double gap = values(i) - values(i - 1);
    if (gap <= spread) {
      ++out.back().size;
    } else if (gap < 100 * spread) {
      return std::nullopt;
    } else {
      out.push_back({i, 1});
    }
  }
  return out;
}

int exact_sqrt(int n) {
  const int r = static_cast<int>(std::lround(std::sqrt(static_cast<double>(n))));
  return r * r == n ? r : -1;
}

double spectral_scale(const Eigen::VectorXd& values) { return std::max(1.0, values.cwiseAbs().maxCoeff()); }

// Right multiplication R_g e_x = alpha(x, g) e_{xg}.
std::vector<MatrixXcd> right_regular(const TwistedGroupAlgebra& a) {
  const FiniteGroup& g = a.group();
  const int n = a.dim();
  std::vector<MatrixXcd> out;
  for (Element y = 0; y < n; ++y) {
    MatrixXcd r = MatrixXcd::Zero(n, n);
    for (Element x = 0; x < n; ++x) r(g.mul(x, y), x) = a.alpha(x, y).to_complex();
    out.push_back(std::move(r));
  }
  return out;
}

std::optional<std::vector<NumericModule>> split_once(const TwistedGroupAlgebra& a,
                                                     const std::vector<MatrixXcd>& left,
                                                     const std::vector<MatrixXcd>& right,
                                                     const std::vector<MatrixXcd>& central, double tolerance,
                                                     std::mt19937_64& rng) {
  const int n = a.dim();
  std::normal_distribution<double> normal;
  const double spread = 1e3 * std::max(tolerance, 1e-13);

  MatrixXcd h = MatrixXcd::Zero(n, n);
  for (const auto& z : central) {
    const MatrixXcd zs = z.adjoint();
    h += normal(rng) * (z + zs) + Cplx(0, normal(rng)) * (z - zs);
  }
  Eigen::SelfAdjointEigenSolver<MatrixXcd> central_solver(h);
  const auto blocks = cluster_values(central_solver.eigenvalues(),
                                     spread * spectral_scale(central_solver.eigenvalues()));
  if (!blocks || blocks->size() != central.size()) return std::nullopt;

  MatrixXcd y = MatrixXcd::Zero(n, n);
  for (const auto& r : right) y += Cplx(normal(rng), normal(rng)) * r;
  const MatrixXcd ry = y + y.adjoint();

  std::vector<NumericModule> out;
  for (const auto& block : *blocks) {
    const int d = exact_sqrt(block.size);
    if (d < 0) return std::nullopt;
    const MatrixXcd q = central_solver.eigenvectors().middleCols(block.start, block.size);
    MatrixXcd w = q;
    if (d > 1) {
      const MatrixXcd k = q.adjoint() * ry * q;
      Eigen::SelfAdjointEigenSolver<MatrixXcd> inner(0.5 * (k + k.adjoint()));
      const auto parts = cluster_values(inner.eigenvalues(), spread * spectral_scale(inner.eigenvalues()));
      if (!parts || static_cast<int>(parts->size()) != d) return std::nullopt;
      for (const auto& p : *parts) {
        if (p.size != d) return std::nullopt;
      }
      w = q * inner.eigenvectors().leftCols(d);
    }
    NumericModule m{d, {}};
    for (const auto& l : left) m.action.push_back(w.adjoint() * l * w);
    out.push_back(std::move(m));
  }
  const StructureConstants st = a.structure();
  for (const auto& m : out) {
    if (!verify_module(m, st, 1e3 * std::max(tolerance, 1e-13)).valid) return std::nullopt;
  }
  return out;
}

}  // namespace

std::vector<std::vector<InducedBlock>> induction_pattern(const GeneralizedDouble& d, int s) {
  const FiniteGroup& g = d.group();
  const auto os = orbit_stabilizer(d.gset(), g, s);
  const Subgroup sub = make_subgroup(g, os.stabilizer);
  const auto& reps = os.right_transversal.reps;
  std::vector<int> pos(d.set_size(), -1);
  for (std::size_t i = 0; i < os.orbit.size(); ++i) pos[os.orbit[i]] = static_cast<int>(i);
  std::vector<std::vector<InducedBlock>> out(d.dim());
  for (int idx = 0; idx < d.dim(); ++idx) {
    const Element b = d.element_of(idx);
    const int t = d.point_of(idx);
    if (pos[t] < 0) continue;
    const int i = pos[t];
    const int j = pos[d.gset().act(t, g.inv(b))];
    const Element gi_inv = g.inv(reps[i]);
    const Element gj_inv = g.inv(reps[j]);
    const Element a = g.mul(g.mul(reps[j], b), gi_inv);
    const int local = sub.from_parent[a];
    if (local < 0) throw std::logic_error("induction pattern left the stabilizer");
    Cyc c = Cyc(d.cocycle().value(s, b, gi_inv)) * Cyc(d.cocycle().value(s, gj_inv, a).inverse());
    out[idx].push_back({i, j, local, std::move(c)});
  }
  return out;
}

ExactModule induce(const GeneralizedDouble& d, int s, const ExactModule& m) {
  const RestrictedCocycle rc = restrict_cocycle(d.cocycle(), s);
  const TwistedGroupAlgebra stab(rc.cocycle);
  const auto check = verify_module(m, stab.structure());
  if (!check.valid) throw Error(ErrorCode::InvalidModule, "not a stabilizer-algebra module: " + check.violation);
  const int k = d.group().order() / rc.stabilizer.group->order();
  const int dim = k * m.dim;
  ExactModule out{dim, {}};
  for (const auto& blocks : induction_pattern(d, s)) {
    CycMatrix x(dim, dim);
    for (const auto& b : blocks) x.set_block(b.to * m.dim, b.from * m.dim, m.action[b.local], b.coefficient);
    out.action.push_back(std::move(x));
  }
  return out;
}

NumericModule induce(const GeneralizedDouble& d, int s, const NumericModule& m, double tolerance) {
  const RestrictedCocycle rc = restrict_cocycle(d.cocycle(), s);
  const TwistedGroupAlgebra stab(rc.cocycle);
  const auto check = verify_module(m, stab.structure(), 1e3 * std::max(tolerance, 1e-13));
  if (!check.valid) throw Error(ErrorCode::InvalidModule, "not a stabilizer-algebra module: " + check.violation);
  const int k = d.group().order() / rc.stabilizer.group->order();
  const int dim = k * m.dim;
  NumericModule out{dim, {}};
  for (const auto& blocks : induction_pattern(d, s)) {
    MatrixXcd x = MatrixXcd::Zero(dim, dim);
    for (const auto& b : blocks) {
      x.block(b.to * m.dim, b.from * m.dim, m.dim, m.dim) = b.coefficient.to_complex() * m.action[b.local];
    }
    out.action.push_back(std::move(x));
  }
  return out;
}

Restriction restrict_by_idempotent(const GeneralizedDouble& d, int s, const ExactModule& n) {
  const FiniteGroup& g = d.group();
  const CycMatrix& p = n.action[d.index(g.identity(), s)];
  const auto cols = independent_columns(p);
  const int r = static_cast<int>(cols.size());
  Restriction out;
  out.embed = CycMatrix(n.dim, r);
  for (int c = 0; c < r; ++c) {
    for (int i = 0; i < n.dim; ++i) out.embed(i, c) = p(i, cols[c]);
  }
  const auto rows = independent_columns(out.embed.transpose());
  CycMatrix square(r, r);
  CycMatrix prows(r, n.dim);
  for (int i = 0; i < r; ++i) {
    for (int c = 0; c < r; ++c) square(i, c) = out.embed(rows[i], c);
    for (int c = 0; c < n.dim; ++c) prows(i, c) = p(rows[i], c);
  }
  out.project = r > 0 ? inverse(square) * prows : CycMatrix(0, n.dim);
  const auto os = orbit_stabilizer(d.gset(), g, s);
  const Subgroup sub = make_subgroup(g, os.stabilizer);
  out.module.dim = r;
  for (Element parent : sub.to_parent) {
    out.module.action.push_back(out.project * n.action[d.index(parent, s)] * out.embed);
  }
  return out;
}

CycMatrix induction_unit(const Restriction& r, int module_dim) {
  // The summand of g_1 = 1 occupies the first module_dim coordinates.
  return r.project.block(0, 0, r.module.dim, module_dim);
}

CycMatrix induction_counit(const GeneralizedDouble& d, int s, const Restriction& r, const ExactModule& n) {
  const FiniteGroup& g = d.group();
  const auto os = orbit_stabilizer(d.gset(), g, s);
  const auto& reps = os.right_transversal.reps;
  const int m = r.module.dim;
  CycMatrix out(n.dim, static_cast<int>(reps.size()) * m);
  for (std::size_t i = 0; i < reps.size(); ++i) {
    out.set_block(0, static_cast<int>(i) * m, n.action[d.index(g.inv(reps[i]), s)] * r.embed);
  }
  return out;
}

SimpleClassification classify_simples(const TwistedGroupAlgebra& a, double tolerance, std::uint64_t seed) {
  const NumericModule reg = to_numeric(regular_representation(a));
  const auto right = right_regular(a);
  std::vector<MatrixXcd> central;
  for (const auto& z : center_basis(a)) {
    MatrixXcd m = MatrixXcd::Zero(a.dim(), a.dim());
    for (int g = 0; g < a.dim(); ++g) {
      if (!z.coeffs[g].is_zero()) m += z.coeffs[g].to_complex() * reg.action[g];
    }
    central.push_back(std::move(m));
  }
  std::mt19937_64 rng(seed);
  constexpr int kMaxAttempts = 5;
  for (int attempt = 1; attempt <= kMaxAttempts; ++attempt) {
    auto modules = split_once(a, reg.action, right, central, tolerance, rng);
    if (!modules) continue;
    std::stable_sort(modules->begin(), modules->end(),
                     [](const NumericModule& x, const NumericModule& y) { return x.dim < y.dim; });
    SimpleClassification out;
    out.attempts = attempt;
    for (auto& m : *modules) {
      out.dims.push_back(m.dim);
      out.modules.push_back(std::move(m));
    }
    const int total = std::accumulate(out.dims.begin(), out.dims.end(), 0, [](int acc, int x) { return acc + x * x; });
    if (total != a.dim()) throw std::logic_error("simple dimensions do not account for the algebra");
    return out;
  }
  throw Error(ErrorCode::IllConditioned, "eigenvalue clusters could not be separated after 5 attempts");
}

bool SimpleModuleReport::all_simple() const {
  for (const auto& o : orbits) {
    for (int e : o.endomorphism_dims) {
      if (e != 1) return false;
    }
    if (!o.pairwise_inequivalent) return false;
  }
  return true;
}

SimpleModuleReport classify_double_simples(const GeneralizedDouble& d, double tolerance, std::uint64_t seed) {
  SimpleModuleReport report;
  report.algebra_dim = d.dim();
  const StructureConstants st = d.structure();
  const BlockDecomposition blocks = decompose_blocks(d);
  for (std::size_t k = 0; k < blocks.orbits.size(); ++k) {
    const OrbitBlock& b = blocks.orbits[k];
    const RestrictedCocycle rc = restrict_cocycle(d.cocycle(), b.representative);
    const TwistedGroupAlgebra stab(rc.cocycle);
    const SimpleClassification simples = classify_simples(stab, tolerance, seed + k);
    OrbitSimples o;
    o.representative = b.representative;
    o.stabilizer_order = rc.stabilizer.group->order();
    o.index = d.group().order() / o.stabilizer_order;
    o.stabilizer_dims = simples.dims;
    for (const auto& m : simples.modules) {
      NumericModule ind = induce(d, b.representative, m, tolerance);
      o.dims.push_back(ind.dim);
      o.endomorphism_dims.push_back(static_cast<int>(hom_numeric(ind, ind, st, tolerance).size()));
      report.accounting += static_cast<long>(ind.dim) * ind.dim;
      o.modules.push_back(std::move(ind));
    }
    for (std::size_t i = 0; i < o.modules.size(); ++i) {
      for (std::size_t j = i + 1; j < o.modules.size(); ++j) {
        if (!hom_numeric(o.modules[i], o.modules[j], st, tolerance).empty()) o.pairwise_inequivalent = false;
      }
    }
    report.orbits.push_back(std::move(o));
  }
  return report;
}

}  // namespace tdouble
