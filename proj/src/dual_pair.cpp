#include "tdouble/dual_pair.hpp"

#include <cmath>
#include <numbers>
#include <numeric>

#include "tdouble/error.hpp"

namespace tdouble {

namespace {

using Eigen::MatrixXcd;
using Cplx = std::complex<double>;

constexpr int kMaxDetectedConductor = 1024;

std::string triple_text(int s, Element y, Element x) {
  return "s=" + std::to_string(s) + " (y,x)=(" + std::to_string(y) + "," + std::to_string(x) + ")";
}

// Entry of maximal modulus.
std::pair<int, int> pivot_entry(const MatrixXcd& q) {
  Eigen::Index r = 0, c = 0;
  q.cwiseAbs().maxCoeff(&r, &c);
  return {static_cast<int>(r), static_cast<int>(c)};
}

MatrixXcd submatrix(const MatrixXcd& m, const std::vector<int>& coords) {
  const int n = static_cast<int>(coords.size());
  MatrixXcd out(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) out(i, j) = m(coords[i], coords[j]);
  }
  return out;
}

NumericModule submodule(const NumericModule& m, const std::vector<int>& coords) {
  NumericModule out{static_cast<int>(coords.size()), {}};
  for (const auto& x : m.action) out.action.push_back(submatrix(x, coords));
  return out;
}

// Smallest N such that every phase is an N-th root of unity.
std::optional<int> detect_conductor(const std::vector<Cplx>& values, double tolerance) {
  std::vector<double> turns;
  for (const auto& c : values) {
    if (std::abs(std::abs(c) - 1.0) > std::max(tolerance, 1e-12) * 1e3) return std::nullopt;
    double t = std::arg(c) / (2 * std::numbers::pi);
    if (t < 0) t += 1;
    turns.push_back(t);
  }
  for (int n = 1; n <= kMaxDetectedConductor; ++n) {
    bool fits = true;
    for (double t : turns) {
      const double k = t * n;
      if (std::abs(k - std::round(k)) > 1e-6) {
        fits = false;
        break;
      }
    }
    if (fits) return n;
  }
  return std::nullopt;
}

// Unvalidated set cocycle read off the family.
SetCocycle extract_set_cocycle(const StableFamily& f, double tolerance) {
  f.check_shapes();
  const FiniteGroup& g = *f.group;
  const RightGSet& set = *f.labels_action;
  const int n = g.order();
  auto at = [&](int s, Element y, Element x) {
    return (static_cast<std::size_t>(s) * n + y) * n + x;
  };
  if (f.is_exact()) {
    std::vector<RootOfUnity> roots(static_cast<std::size_t>(f.size()) * n * n);
    long conductor = 1;
    for (int s = 0; s < f.size(); ++s) {
      for (Element x = 0; x < n; ++x) {
        const int j = set.act(s, g.inv(x));
        for (Element y = 0; y < n; ++y) {
          const CycMatrix p = f.exact[j][y] * f.exact[s][x];
          const CycMatrix& q = f.exact[s][g.mul(y, x)];
          if (q.rows() == 0 || q.cols() == 0) {
            roots[at(s, y, x)] = RootOfUnity(1, 0);
            continue;
          }
          const auto [r, c] = pivot_entry(q.to_complex());
          if (q(r, c).is_zero()) throw Error(ErrorCode::NotProjective, "phi is singular at " + triple_text(s, y, x));
          const Cyc ratio = p(r, c) / q(r, c);
          if (p != q * ratio) {
            throw Error(ErrorCode::NotProjective, "phi(y)phi(x) is not a multiple of phi(yx) at " + triple_text(s, y, x));
          }
          const auto root = ratio.as_root_of_unity();
          if (!root) throw Error(ErrorCode::NotRootOfUnity, "scalar " + ratio.str() + " at " + triple_text(s, y, x));
          roots[at(s, y, x)] = root->reduced();
          conductor = lcm_conductor(conductor, roots[at(s, y, x)].conductor);
        }
      }
    }
    SetCocycle out(f.group, f.labels_action, static_cast<int>(conductor));
    for (int s = 0; s < f.size(); ++s) {
      for (Element y = 0; y < n; ++y) {
        for (Element x = 0; x < n; ++x) {
          out.set_exponent(s, y, x, roots[at(s, y, x)].promoted(static_cast<int>(conductor)).exponent);
        }
      }
    }
    return out;
  }
  std::vector<Cplx> ratios(static_cast<std::size_t>(f.size()) * n * n, Cplx(1, 0));
  for (int s = 0; s < f.size(); ++s) {
    for (Element x = 0; x < n; ++x) {
      const int j = set.act(s, g.inv(x));
      for (Element y = 0; y < n; ++y) {
        const MatrixXcd p = f.numeric[j][y] * f.numeric[s][x];
        const MatrixXcd& q = f.numeric[s][g.mul(y, x)];
        if (q.size() == 0) continue;
        const auto [r, c] = pivot_entry(q);
        if (std::abs(q(r, c)) < tolerance) throw Error(ErrorCode::NotProjective, "phi is singular at " + triple_text(s, y, x));
        const Cplx ratio = p(r, c) / q(r, c);
        const double scale = std::max(1.0, p.cwiseAbs().maxCoeff());
        if ((p - ratio * q).cwiseAbs().maxCoeff() > tolerance * scale) {
          throw Error(ErrorCode::NotProjective, "phi(y)phi(x) is not a multiple of phi(yx) at " + triple_text(s, y, x));
        }
        ratios[at(s, y, x)] = ratio;
      }
    }
  }
  const auto conductor = detect_conductor(ratios, tolerance);
  if (!conductor) throw Error(ErrorCode::NotRootOfUnity, "cocycle values are not roots of unity of small order");
  SetCocycle out(f.group, f.labels_action, *conductor);
  for (int s = 0; s < f.size(); ++s) {
    for (Element y = 0; y < n; ++y) {
      for (Element x = 0; x < n; ++x) {
        double t = std::arg(ratios[at(s, y, x)]) / (2 * std::numbers::pi);
        out.set_exponent(s, y, x, std::lround(t * *conductor));
      }
    }
  }
  return out;
}

template <class Matrix>
bool is_identity(const Matrix& m);

template <>
bool is_identity(const CycMatrix& m) {
  return m == CycMatrix::identity(m.rows());
}

template <>
bool is_identity(const MatrixXcd& m) {
  return (m - MatrixXcd::Identity(m.rows(), m.cols())).cwiseAbs().maxCoeff() <= 1e-9;
}

}  // namespace

// ------------------------------------------------------------------ family

int StableFamily::total_dim() const { return std::accumulate(dims.begin(), dims.end(), 0); }

int StableFamily::offset(int s) const { return std::accumulate(dims.begin(), dims.begin() + s, 0); }

int StableFamily::level_count() const {
  std::size_t n = 0;
  for (const auto& l : levels) n = std::max(n, l.size());
  return static_cast<int>(n);
}

std::vector<int> StableFamily::level_coordinates(int n) const {
  std::vector<int> out;
  for (int s = 0; s < size(); ++s) {
    int start = offset(s);
    for (int k = 0; k < static_cast<int>(levels[s].size()); ++k) {
      if (k == n) {
        for (int i = 0; i < levels[s][k]; ++i) out.push_back(start + i);
      }
      start += levels[s][k];
    }
  }
  return out;
}

void StableFamily::sync_numeric() {
  numeric.assign(exact.size(), {});
  for (std::size_t s = 0; s < exact.size(); ++s) {
    for (const auto& m : exact[s]) numeric[s].push_back(m.to_complex());
  }
}

void StableFamily::check_shapes() const {
  if (!group || !labels_action) throw Error(ErrorCode::CrossrefError, "family has no group or label action");
  const FiniteGroup& g = *group;
  const int n = g.order();
  if (labels_action->group_order() != n || labels_action->size() != size() ||
      static_cast<int>(labels.size()) != size() || static_cast<int>(levels.size()) != size()) {
    throw Error(ErrorCode::CrossrefError, "family labels, dims, levels and action disagree in size");
  }
  if (static_cast<int>(numeric.size()) != size() || (is_exact() && static_cast<int>(exact.size()) != size())) {
    throw Error(ErrorCode::InvalidModule, "family is missing phi maps");
  }
  for (int s = 0; s < size(); ++s) {
    if (std::accumulate(levels[s].begin(), levels[s].end(), 0) != dims[s]) {
      throw Error(ErrorCode::InvalidModule, "levels of " + labels[s] + " do not sum to its dimension");
    }
    if (static_cast<int>(numeric[s].size()) != n || (is_exact() && static_cast<int>(exact[s].size()) != n)) {
      throw Error(ErrorCode::InvalidModule, "label " + labels[s] + " needs one phi per group element");
    }
    for (Element x = 0; x < n; ++x) {
      const int t = labels_action->act(s, g.inv(x));
      const auto& m = numeric[s][x];
      if (m.rows() != dims[t] || m.cols() != dims[s]) {
        throw Error(ErrorCode::InvalidModule, "phi_" + labels[s] + "(" + std::to_string(x) + ") has the wrong shape");
      }
      if (levels[t] != levels[s]) throw Error(ErrorCode::InvalidModule, "levels differ along an orbit");
      // Level-preserving: zero outside the diagonal level blocks.
      int r0 = 0;
      for (std::size_t a = 0; a < levels[t].size(); ++a) {
        int c0 = 0;
        for (std::size_t b = 0; b < levels[s].size(); ++b) {
          if (a != b && levels[t][a] > 0 && levels[s][b] > 0 &&
              m.block(r0, c0, levels[t][a], levels[s][b]).cwiseAbs().maxCoeff() > 1e-9) {
            throw Error(ErrorCode::InvalidModule, "phi_" + labels[s] + " mixes levels");
          }
          c0 += levels[s][b];
        }
        r0 += levels[t][a];
      }
    }
    const bool unit = is_exact() ? is_identity(exact[s][g.identity()]) : is_identity(numeric[s][g.identity()]);
    if (!unit) throw Error(ErrorCode::NotProjective, "phi_" + labels[s] + "(1) is not the identity");
  }
}

StableFamily ProjectiveAction::as_family() const {
  StableFamily f;
  f.group = group;
  f.labels_action = std::make_shared<RightGSet>(RightGSet::trivial(*group, 1));
  f.labels = {"M"};
  f.dims = {dim};
  f.levels = {levels.empty() ? std::vector<int>{dim} : levels};
  if (is_exact()) {
    f.exact = {exact};
    f.sync_numeric();
  } else {
    f.numeric = {numeric};
  }
  return f;
}

TwoCocycle extract_cocycle(const ProjectiveAction& phi, double tolerance) {
  const TwoCocycle alpha = extract_set_cocycle(phi.as_family(), tolerance).component(0);
  const auto check = validate_cocycle(alpha);
  if (!check.valid) throw Error(ErrorCode::InvalidCocycle, "extracted scalars fail the cocycle law: " + check.violation);
  return alpha;
}

SetCocycle build_set_cocycle(const StableFamily& f, double tolerance) {
  SetCocycle alpha = extract_set_cocycle(f, tolerance);
  const auto check = validate_cocycle(alpha);
  if (!check.valid) throw Error(ErrorCode::InvalidCocycle, "family scalars fail the set-cocycle law: " + check.violation);
  return alpha;
}

// ------------------------------------------------------------------ actions

ExactModule double_action(const StableFamily& f, const GeneralizedDouble& d) {
  if (!f.is_exact()) throw Error(ErrorCode::Unsupported, "exact action needs an exact family");
  const FiniteGroup& g = d.group();
  const int n = f.total_dim();
  ExactModule m{n, {}};
  for (int idx = 0; idx < d.dim(); ++idx) {
    const Element a = d.element_of(idx);
    const int t = d.point_of(idx);
    CycMatrix x(n, n);
    x.set_block(f.offset(f.labels_action->act(t, g.inv(a))), f.offset(t), f.exact[t][a]);
    m.action.push_back(std::move(x));
  }
  return m;
}

NumericModule double_action_numeric(const StableFamily& f, const GeneralizedDouble& d) {
  const FiniteGroup& g = d.group();
  const int n = f.total_dim();
  NumericModule m{n, {}};
  for (int idx = 0; idx < d.dim(); ++idx) {
    const Element a = d.element_of(idx);
    const int t = d.point_of(idx);
    MatrixXcd x = MatrixXcd::Zero(n, n);
    const int target = f.labels_action->act(t, g.inv(a));
    x.block(f.offset(target), f.offset(t), f.dims[target], f.dims[t]) = f.numeric[t][a];
    m.action.push_back(std::move(x));
  }
  return m;
}

ExactModule orbit_action(const StableFamily& f, const GeneralizedDouble& d, int s) {
  if (!f.is_exact()) throw Error(ErrorCode::Unsupported, "exact action needs an exact family");
  const FiniteGroup& g = d.group();
  const auto os = orbit_stabilizer(*f.labels_action, g, s);
  std::vector<int> off(f.size(), -1);
  int n = 0;
  for (int t : os.orbit) {
    off[t] = n;
    n += f.dims[t];
  }
  ExactModule m{n, {}};
  for (int idx = 0; idx < d.dim(); ++idx) {
    const Element a = d.element_of(idx);
    const int t = d.point_of(idx);
    CycMatrix x(n, n);
    if (off[t] >= 0) x.set_block(off[f.labels_action->act(t, g.inv(a))], off[t], f.exact[t][a]);
    m.action.push_back(std::move(x));
  }
  return m;
}

bool orbit_sums_invariant(const StableFamily& f, const NumericModule& m, double tolerance) {
  std::vector<int> orbit_of(f.size(), -1);
  const auto reps = orbit_representatives(*f.labels_action);
  for (std::size_t k = 0; k < reps.size(); ++k) {
    for (int t : orbit_stabilizer(*f.labels_action, *f.group, reps[k]).orbit) orbit_of[t] = static_cast<int>(k);
  }
  for (const auto& x : m.action) {
    for (int s = 0; s < f.size(); ++s) {
      for (int t = 0; t < f.size(); ++t) {
        if (orbit_of[s] == orbit_of[t] || f.dims[s] == 0 || f.dims[t] == 0) continue;
        if (x.block(f.offset(t), f.offset(s), f.dims[t], f.dims[s]).cwiseAbs().maxCoeff() > tolerance) return false;
      }
    }
  }
  return true;
}

ExactModule stabilizer_module(const StableFamily& f, int s) {
  if (!f.is_exact()) throw Error(ErrorCode::Unsupported, "exact module needs an exact family");
  const auto os = orbit_stabilizer(*f.labels_action, *f.group, s);
  ExactModule m{f.dims[s], {}};
  for (Element a : os.stabilizer) m.action.push_back(f.exact[s][a]);
  return m;
}

PsiIsomorphism psi_isomorphism(const StableFamily& f, const GeneralizedDouble& d, int s) {
  if (!f.is_exact()) throw Error(ErrorCode::Unsupported, "Psi is built for exact families");
  const FiniteGroup& g = d.group();
  const auto os = orbit_stabilizer(*f.labels_action, g, s);
  const auto& reps = os.right_transversal.reps;
  PsiIsomorphism out;
  out.induced = induce(d, s, stabilizer_module(f, s));
  out.orbit_module = orbit_action(f, d, s);
  const int m = f.dims[s];
  const int n = out.orbit_module.dim;
  out.psi = CycMatrix(n, static_cast<int>(reps.size()) * m);
  out.chi = CycMatrix(static_cast<int>(reps.size()) * m, n);
  int off = 0;
  for (std::size_t i = 0; i < reps.size(); ++i) {
    const Element gi = reps[i];
    const Element gi_inv = g.inv(gi);
    const int col = static_cast<int>(i) * m;
    out.psi.set_block(off, col, f.exact[s][gi_inv]);
    out.chi.set_block(col, off, f.exact[os.orbit[i]][gi], Cyc(d.cocycle().value(s, gi, gi_inv).inverse()));
    off += f.dims[os.orbit[i]];
  }
  return out;
}

std::vector<MatrixXcd> commutant(const StableFamily& f, const GeneralizedDouble& d, bool respect_levels,
                                 double tolerance) {
  const NumericModule m = double_action_numeric(f, d);
  auto gens = generator_images(m, d.structure());
  if (respect_levels && f.level_count() > 1) {
    for (int n = 0; n < f.level_count(); ++n) {
      MatrixXcd p = MatrixXcd::Zero(m.dim, m.dim);
      for (int c : f.level_coordinates(n)) p(c, c) = 1;
      gens.push_back(std::move(p));
    }
  }
  return intertwiners(gens, gens, m.dim, m.dim, tolerance);
}

std::vector<MatrixXcd> commutant(const ProjectiveAction& phi, double tolerance) {
  const StableFamily f = phi.as_family();
  const GeneralizedDouble d(build_set_cocycle(f, tolerance));
  return commutant(f, d, true, tolerance);
}

// ------------------------------------------------------------ decomposition

bool LevelDecomposition::all_irreducible() const {
  for (const auto& e : entries) {
    if (e.multiplicity > 0 && !e.irreducible) return false;
  }
  return true;
}

bool LevelDecomposition::pairwise_inequivalent() const {
  for (std::size_t p = 0; p < entries.size(); ++p) {
    for (std::size_t q = 0; q < entries.size(); ++q) {
      if (p != q && entries[p].multiplicity > 0 && entries[q].multiplicity > 0 && hom_dims[p][q] != 0) return false;
    }
  }
  return true;
}

bool DualPairReport::ok() const {
  auto good = [](const LevelDecomposition& l) {
    return l.all_irreducible() && l.pairwise_inequivalent() && l.accounting_ok() && l.commutant_ok();
  };
  if (!simples.accounting_ok() || !simples.all_simple() || !good(global)) return false;
  for (const auto& l : levels) {
    if (!good(l)) return false;
  }
  return true;
}

namespace {

LevelDecomposition decompose_space(const NumericModule& space, const SimpleModuleReport& simples,
                                   const StructureConstants& st, int level, double tolerance) {
  LevelDecomposition out;
  out.level = level;
  out.dim = space.dim;
  const auto comm = hom_numeric(space, space, st, tolerance);
  out.commutant_dim = static_cast<int>(comm.size());
  std::vector<std::vector<MatrixXcd>> actions;
  for (std::size_t j = 0; j < simples.orbits.size(); ++j) {
    const auto& orbit = simples.orbits[j];
    for (std::size_t i = 0; i < orbit.modules.size(); ++i) {
      const auto h = hom_numeric(orbit.modules[i], space, st, tolerance);
      const int m = static_cast<int>(h.size());
      std::vector<MatrixXcd> act;
      for (const auto& x : comm) {
        MatrixXcd a(m, m);
        for (int l = 0; l < m; ++l) {
          for (int k = 0; k < m; ++k) a(l, k) = (h[l].adjoint() * x * h[k]).trace();
        }
        act.push_back(std::move(a));
      }
      MultiplicityEntry e;
      e.orbit = static_cast<int>(j);
      e.simple = static_cast<int>(i);
      e.level = level;
      e.simple_dim = orbit.modules[i].dim;
      e.multiplicity = m;
      e.irreducible = m > 0 && intertwiners(act, act, m, m, tolerance).size() == 1;
      out.accounting += static_cast<long>(e.simple_dim) * m;
      out.commutant_expected += static_cast<long>(m) * m;
      out.entries.push_back(e);
      actions.push_back(std::move(act));
    }
  }
  const std::size_t k = out.entries.size();
  out.hom_dims.assign(k, std::vector<int>(k, 0));
  for (std::size_t p = 0; p < k; ++p) {
    for (std::size_t q = 0; q < k; ++q) {
      const int mp = out.entries[p].multiplicity;
      const int mq = out.entries[q].multiplicity;
      if (mp == 0 || mq == 0) continue;
      out.hom_dims[p][q] = static_cast<int>(intertwiners(actions[p], actions[q], mp, mq, tolerance).size());
    }
  }
  return out;
}

}  // namespace

DualPairReport dual_pair_decompose(const StableFamily& f, const GeneralizedDouble& d, double tolerance,
                                   std::uint64_t seed) {
  f.check_shapes();
  DualPairReport report;
  report.simples = classify_double_simples(d, tolerance, seed);
  const NumericModule space = double_action_numeric(f, d);
  const StructureConstants st = d.structure();
  const auto check = verify_module(space, st, 1e3 * std::max(tolerance, 1e-13));
  if (!check.valid) throw Error(ErrorCode::InvalidModule, "family does not define a module: " + check.violation);
  report.global = decompose_space(space, report.simples, st, -1, tolerance);
  if (f.level_count() > 1) {
    for (int n = 0; n < f.level_count(); ++n) {
      report.levels.push_back(decompose_space(submodule(space, f.level_coordinates(n)), report.simples, st, n,
                                              tolerance));
    }
  }
  for (const auto& e : report.global.entries) {
    if (e.multiplicity == 0) {
      report.absent.push_back("orbit " + std::to_string(e.orbit) + " simple " + std::to_string(e.simple) +
                              " (dim " + std::to_string(e.simple_dim) + ")");
    }
  }
  return report;
}

// ------------------------------------------------------------------ group B

BElement b_multiply(const SetCocycle& alpha, const BElement& y, const BElement& x) {
  const FiniteGroup& g = *alpha.group();
  const RightGSet& set = *alpha.gset();
  BElement out;
  out.x = g.mul(y.x, x.x);
  out.u.resize(set.size());
  for (int n = 0; n < set.size(); ++n) {
    out.u[n] = (alpha.value(n, y.x, x.x) * y.u[set.act(n, g.inv(x.x))] * x.u[n]).reduced();
  }
  return out;
}

CycMatrix b_action(const StableFamily& f, const BElement& b) {
  if (!f.is_exact()) throw Error(ErrorCode::Unsupported, "exact B-action needs an exact family");
  const FiniteGroup& g = *f.group;
  const int n = f.total_dim();
  CycMatrix out(n, n);
  for (int s = 0; s < f.size(); ++s) {
    out.set_block(f.offset(f.labels_action->act(s, g.inv(b.x))), f.offset(s), f.exact[s][b.x], Cyc(b.u[s]));
  }
  return out;
}

}  // namespace tdouble
