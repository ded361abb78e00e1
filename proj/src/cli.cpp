#include "tdouble/cli.hpp"

#include <chrono>
#include <cstdio>
#include <cstdlib>

#include "tdouble/error.hpp"
#include "tdouble/oracle.hpp"
#include "tdouble/twisted_algebra.hpp"

namespace tdouble {

using nlohmann::json;

namespace {

oracle::RawTwisted to_raw(const TwoCocycle& alpha) {
  const FiniteGroup& g = *alpha.group();
  oracle::RawTwisted r;
  r.order = g.order();
  r.conductor = alpha.conductor();
  for (Element x = 0; x < g.order(); ++x) {
    for (Element y = 0; y < g.order(); ++y) r.mul.push_back(g.mul(x, y));
  }
  r.exps = alpha.exponents();
  return r;
}

oracle::RawDouble to_raw(const SetCocycle& alpha) {
  const FiniteGroup& g = *alpha.group();
  const RightGSet& s = *alpha.gset();
  oracle::RawDouble r;
  r.order = g.order();
  r.set_size = s.size();
  r.conductor = alpha.conductor();
  for (Element x = 0; x < g.order(); ++x) {
    for (Element y = 0; y < g.order(); ++y) r.mul.push_back(g.mul(x, y));
  }
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

bool double_context(const Workspace& w) { return w.gset || w.set_cocycle; }

TwoCocycle plain_cocycle(const Workspace& w) {
  if (w.set_cocycle) throw Error(ErrorCode::CrossrefError, "this command needs a plain cocycle, got a set cocycle");
  return w.cocycle ? *w.cocycle : TwoCocycle::trivial(w.group);
}

SetCocycle set_cocycle(const Workspace& w) {
  if (w.set_cocycle) return *w.set_cocycle;
  const GSetPtr s = w.gset ? w.gset : std::make_shared<const RightGSet>(RightGSet::trivial(*w.group, 1));
  if (w.cocycle) return SetCocycle::constant(s, *w.cocycle);
  return SetCocycle::trivial(w.group, s);
}

json check_json(const CocycleCheck& c, int conductor) {
  json j{{"valid", c.valid}, {"conductor", conductor}};
  if (!c.valid) j["violation"] = c.violation;
  return j;
}

// ------------------------------------------------------------------ commands

json cmd_validate(const Workspace& w, const RunOptions& o, bool& ok) {
  json checks;
  ok = true;
  checks["group"] = {{"order", w.group->order()}, {"classes", conjugacy_classes(*w.group).size()}};
  if (w.gset) checks["gset"] = {{"size", w.gset->size()}, {"orbits", orbit_representatives(*w.gset).size()}};
  if (w.cocycle) {
    const auto c = validate_cocycle(*w.cocycle);
    ok = ok && c.valid;
    checks["cocycle"] = check_json(c, w.cocycle->conductor());
  }
  if (w.set_cocycle) {
    const auto c = validate_cocycle(*w.set_cocycle);
    ok = ok && c.valid;
    checks["set_cocycle"] = check_json(c, w.set_cocycle->conductor());
  }
  if (w.family) {
    json f{{"labels", w.family->size()}, {"total_dim", w.family->total_dim()}, {"exact", w.family->is_exact()}};
    try {
      const SetCocycle alpha = build_set_cocycle(*w.family, o.tolerance);
      f["valid"] = true;
      f["conductor"] = alpha.conductor();
    } catch (const Error& e) {
      ok = false;
      f["valid"] = false;
      f["violation"] = std::string(error_code_name(e.code())) + ": " + e.what();
    }
    checks["family"] = f;
  }
  return {{"valid", ok}, {"checks", checks}};
}

json cmd_tga(const Workspace& w, const RunOptions& o) {
  const TwistedGroupAlgebra a(plain_cocycle(w));
  const auto simples = classify_simples(a, o.tolerance, o.seed);
  std::vector<int> blocks;
  for (int d : simples.dims) blocks.push_back(d * d);
  return {{"dim", a.dim()},
          {"regular_class_count", alpha_regular_classes(a.cocycle()).classes.size()},
          {"center_dim", center_basis(a).size()},
          {"semisimple", is_semisimple(a)},
          {"simple_dims", simples.dims},
          {"block_dims", blocks}};
}

json double_simples_json(const SimpleModuleReport& r) {
  json orbits = json::array();
  for (const auto& o : r.orbits) {
    orbits.push_back({{"rep", o.representative},
                      {"stabilizer_order", o.stabilizer_order},
                      {"index", o.index},
                      {"stabilizer_dims", o.stabilizer_dims},
                      {"dims", o.dims},
                      {"endomorphism_dims", o.endomorphism_dims},
                      {"pairwise_inequivalent", o.pairwise_inequivalent}});
  }
  return {{"orbits", orbits},
          {"accounting", r.accounting},
          {"algebra_dim", r.algebra_dim},
          {"accounting_ok", r.accounting_ok()},
          {"all_simple", r.all_simple()}};
}

json cmd_double(const Workspace& w, const RunOptions& o, json& warnings) {
  const GeneralizedDouble d(set_cocycle(w));
  const auto blocks = decompose_blocks(d);
  const auto center = double_center_basis(d);
  const auto simples = classify_double_simples(d, o.tolerance, o.seed);
  json orbits = json::array();
  for (std::size_t j = 0; j < blocks.orbits.size(); ++j) {
    const auto& b = blocks.orbits[j];
    json dims = json::array();
    for (const auto& s : simples.orbits) {
      if (s.representative == b.representative) dims = s.dims;
    }
    orbits.push_back({{"rep", b.representative},
                      {"orbit", b.orbit},
                      {"stabilizer_order", b.stabilizer.size()},
                      {"block_dim", b.basis.size()},
                      {"center_dim", center.orbit_counts[j]},
                      {"zlt_formula", static_cast<bool>(center.orbit_used_formula[j])},
                      {"simple_dims", dims}});
  }
  for (const auto& msg : center.warnings) warnings.push_back(msg);
  return {{"dim", d.dim()},
          {"orbits", orbits},
          {"total_center_dim", center.elements.size()},
          {"zlt_path", center.path},
          {"accounting", simples.accounting},
          {"accounting_ok", simples.accounting_ok()}};
}

json cmd_simples(const Workspace& w, const RunOptions& o, bool& ok) {
  if (double_context(w)) {
    const GeneralizedDouble d(set_cocycle(w));
    const auto r = classify_double_simples(d, o.tolerance, o.seed);
    ok = r.accounting_ok() && r.all_simple();
    json j = double_simples_json(r);
    j["algebra"] = "double";
    return j;
  }
  const TwistedGroupAlgebra a(plain_cocycle(w));
  const auto r = classify_simples(a, o.tolerance, o.seed);
  long squares = 0;
  for (int d : r.dims) squares += static_cast<long>(d) * d;
  ok = squares == a.dim();
  return {{"algebra", "twisted"}, {"dim", a.dim()}, {"dims", r.dims}, {"sum_of_squares", squares}};
}

json level_json(const LevelDecomposition& l) {
  json entries = json::array();
  for (const auto& e : l.entries) {
    entries.push_back({{"orbit", e.orbit},
                       {"simple", e.simple},
                       {"simple_dim", e.simple_dim},
                       {"multiplicity", e.multiplicity},
                       {"irreducible", e.irreducible}});
  }
  json j{{"dim", l.dim},
         {"entries", entries},
         {"commutant_dim", l.commutant_dim},
         {"commutant_expected", l.commutant_expected},
         {"accounting", l.accounting},
         {"all_irreducible", l.all_irreducible()},
         {"pairwise_inequivalent", l.pairwise_inequivalent()}};
  if (l.level >= 0) j["level"] = l.level;
  return j;
}

bool same_values(const SetCocycle& a, const SetCocycle& b) {
  const int n = a.group()->order();
  if (a.gset()->size() != b.gset()->size()) return false;
  for (int s = 0; s < a.gset()->size(); ++s) {
    for (Element x = 0; x < n; ++x) {
      for (Element y = 0; y < n; ++y) {
        if (Cyc(a.value(s, x, y)) != Cyc(b.value(s, x, y))) return false;
      }
    }
  }
  return true;
}

json cmd_dualpair(const Workspace& w, const RunOptions& o, bool& ok) {
  if (!w.family) throw Error(ErrorCode::CrossrefError, "dualpair needs a family file (--family)");
  const StableFamily& f = *w.family;
  const SetCocycle alpha = build_set_cocycle(f, o.tolerance);
  const GeneralizedDouble d(alpha);
  const auto r = dual_pair_decompose(f, d, o.tolerance, o.seed);
  ok = r.ok();
  json levels = json::array();
  for (const auto& l : r.levels) levels.push_back(level_json(l));
  json j{{"ok", ok},
         {"labels", f.labels},
         {"total_dim", f.total_dim()},
         {"conductor", alpha.conductor()},
         {"simples", double_simples_json(r.simples)},
         {"global", level_json(r.global)},
         {"levels", levels},
         {"absent", r.absent}};
  if (w.cocycle || w.set_cocycle) j["cocycle_matches"] = same_values(alpha, set_cocycle(w));
  return j;
}

json cmd_oracle(const Workspace& w, const RunOptions& o, bool& ok) {
  const bool dbl = double_context(w);
  json j{{"target", o.target}, {"context", dbl ? "double" : "twisted"}};
  long oracle_value = 0;
  long library_value = 0;
  if (o.target == "center") {
    if (dbl) {
      const SetCocycle alpha = set_cocycle(w);
      oracle_value = oracle::center_dimension(to_raw(alpha));
      library_value = static_cast<long>(double_center_basis(GeneralizedDouble(alpha)).elements.size());
    } else {
      const TwoCocycle alpha = plain_cocycle(w);
      oracle_value = oracle::center_dimension(to_raw(alpha));
      library_value = static_cast<long>(center_basis(TwistedGroupAlgebra(alpha)).size());
    }
  } else if (o.target == "associativity") {
    // Associativity of the algebra is equivalent to the cocycle law.
    if (dbl) {
      const SetCocycle alpha = set_cocycle(w);
      oracle_value = oracle::double_associative(to_raw(alpha));
      library_value = validate_cocycle(alpha).valid;
    } else {
      const TwoCocycle alpha = plain_cocycle(w);
      oracle_value = oracle::tga_associative(to_raw(alpha));
      library_value = validate_cocycle(alpha).valid;
    }
    j["oracle"] = oracle_value != 0;
    j["library"] = library_value != 0;
    ok = oracle_value == library_value;
    j["agree"] = ok;
    return j;
  } else if (o.target == "regular-classes" || o.target == "simple-count") {
    const bool count_simples = o.target == "simple-count";
    auto one = [&](const TwoCocycle& alpha, long& oracle_out, long& library_out) {
      const auto r = to_raw(alpha);
      if (count_simples) {
        oracle_out += oracle::simple_count(r);
        library_out += static_cast<long>(classify_simples(TwistedGroupAlgebra(alpha), o.tolerance, o.seed).dims.size());
      } else {
        oracle_out += oracle::regular_class_count(r);
        library_out += static_cast<long>(alpha_regular_classes(alpha).classes.size());
      }
    };
    if (dbl) {
      const SetCocycle alpha = set_cocycle(w);
      if (!validate_cocycle(alpha).valid) throw Error(ErrorCode::InvalidCocycle, "set cocycle fails the cocycle law");
      for (int s : orbit_representatives(*alpha.gset())) one(restrict_cocycle(alpha, s).cocycle, oracle_value, library_value);
    } else {
      const TwoCocycle alpha = plain_cocycle(w);
      if (!validate_cocycle(alpha).valid) throw Error(ErrorCode::InvalidCocycle, "cocycle fails the cocycle law");
      one(alpha, oracle_value, library_value);
    }
  } else {
    throw Error(ErrorCode::Unsupported, "unknown oracle target '" + o.target + "'");
  }
  j["oracle"] = oracle_value;
  j["library"] = library_value;
  ok = oracle_value == library_value;
  j["agree"] = ok;
  return j;
}

json round_doubles(const json& j) {
  if (j.is_number_float()) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", j.get<double>());
    return std::strtod(buf, nullptr);
  }
  if (j.is_array()) {
    json out = json::array();
    for (const auto& x : j) out.push_back(round_doubles(x));
    return out;
  }
  if (j.is_object()) {
    json out = json::object();
    for (auto it = j.begin(); it != j.end(); ++it) out[it.key()] = round_doubles(it.value());
    return out;
  }
  return j;
}

}  // namespace

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::ParseError:
    case ErrorCode::CrossrefError:
      return 2;
    case ErrorCode::InvalidGroup:
    case ErrorCode::NotSubgroup:
    case ErrorCode::InvalidGSet:
    case ErrorCode::InvalidCocycle:
    case ErrorCode::InvalidModule:
      return 1;
    default:
      return 3;
  }
}

std::string canonical_json(const json& j) { return round_doubles(j).dump(2) + "\n"; }

Report run(const RunOptions& o) {
  const auto start = std::chrono::steady_clock::now();
  Report report;
  json& out = report.json;
  out["command"] = o.command;
  if (o.command == "oracle") out["target"] = o.target;
  out["seed"] = o.seed;
  out["tolerance"] = o.tolerance;
  out["warnings"] = json::array();
  try {
    const Workspace w = load_workspace(o.inputs);
    json inputs = json::array();
    std::uint64_t digest = fnv1a("");
    for (const auto& s : w.sources) {
      inputs.push_back({{"kind", s.kind}, {"path", s.path}, {"format", s.format}, {"digest", hex64(s.digest)}});
      digest = fnv1a(s.kind + ":" + hex64(s.digest) + ";", digest);
    }
    out["inputs"] = inputs;
    out["inputs_digest"] = hex64(digest);
    bool ok = true;
    std::string backend = "numeric";
    if (o.command == "validate") {
      out["results"] = cmd_validate(w, o, ok);
      backend = "exact";
    } else if (o.command == "tga") {
      out["results"] = cmd_tga(w, o);
    } else if (o.command == "double") {
      out["results"] = cmd_double(w, o, out["warnings"]);
      ok = out["results"]["accounting_ok"].get<bool>();
    } else if (o.command == "simples") {
      out["results"] = cmd_simples(w, o, ok);
    } else if (o.command == "dualpair") {
      out["results"] = cmd_dualpair(w, o, ok);
    } else if (o.command == "oracle") {
      out["results"] = cmd_oracle(w, o, ok);
      if (o.target == "associativity") backend = "exact";
    } else {
      throw Error(ErrorCode::Unsupported, "unknown command '" + o.command + "'");
    }
    out["backend"] = backend;
    report.exit_code = ok ? 0 : 1;
  } catch (const Error& e) {
    out["error"] = {{"code", error_code_name(e.code())}, {"message", e.what()}};
    report.exit_code = exit_code_for(e.code());
  }
  if (o.timing) {
    out["timing"] = {{"seconds", std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count()}};
  }
  return report;
}

}  // namespace tdouble
