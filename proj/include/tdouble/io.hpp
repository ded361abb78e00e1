#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tdouble/cocycle.hpp"
#include "tdouble/dual_pair.hpp"
#include "tdouble/group.hpp"

namespace tdouble {

// Line-oriented text formats. `#` starts a comment; blank lines are skipped.
// Errors carry "path:line:col" and the code PARSE_ERROR, or CROSSREF_ERROR
// when a file refers to something the loaded objects do not have.
//
//   group:  `order N` then N rows of N indices (the table), or
//           `perm [degree]` then one generator per line in 0-based cycles.
//   gset:   `size M` then M rows of |G| indices, row s holding s.g.
//   cocycle:     `cocycle N=<n>` then lines `x y k`, alpha(x,y) = zeta_n^k.
//   set cocycle: `setcocycle N=<n>` then lines `s x y k`.
//   family: `family labels=K`, then K lines
//             `label <s> dim=<d> [name=<text>] [levels=<d1>,<d2>,...]`
//           and blocks `phi <s> <x>` followed by dim(M_{s.x^-1}) rows of
//           dim(M_s) entries. Entries are exact (`1/2`, `zeta(8)^3`,
//           `1-zeta(3)`) or decimal (`0.5`, `(0.5,-1e-3)` for re,im).
//           phi(s,1) defaults to the identity; all others are required.
// Omitted cocycle entries default to exponent 0.

struct Source {
  std::string kind;    // group, gset, cocycle, family
  std::string path;
  std::string format;  // e.g. "group-table/1"
  std::uint64_t digest = 0;
};

struct Workspace {
  GroupPtr group;
  GSetPtr gset;  // null when no G-set file was given
  std::optional<TwoCocycle> cocycle;
  std::optional<SetCocycle> set_cocycle;
  std::optional<StableFamily> family;
  std::vector<Source> sources;
};

struct InputPaths {
  std::string group;
  std::string gset;
  std::string cocycle;
  std::string family;
};

std::uint64_t fnv1a(std::string_view bytes, std::uint64_t hash = 14695981039346656037ull);
std::string hex64(std::uint64_t v);

FiniteGroup parse_group(std::string_view text, const std::string& path = "<group>", std::string* format = nullptr);
RightGSet parse_gset(std::string_view text, const FiniteGroup& g, const std::string& path = "<gset>");

struct ParsedCocycle {
  std::optional<TwoCocycle> plain;
  std::optional<SetCocycle> set;
};

/// `gset` may be null for a plain cocycle file.
ParsedCocycle parse_cocycle(std::string_view text, const GroupPtr& g, const GSetPtr& gset,
                            const std::string& path = "<cocycle>");

/// With a null gset the family has one label acted on trivially.
StableFamily parse_family(std::string_view text, const GroupPtr& g, const GSetPtr& gset,
                          const std::string& path = "<family>");

std::string write_group(const FiniteGroup& g);
std::string write_gset(const RightGSet& s);
std::string write_cocycle(const TwoCocycle& alpha);
std::string write_cocycle(const SetCocycle& alpha);
/// Exact families only.
std::string write_family(const StableFamily& f);

/// Read the files, resolve cross references and record provenance. The group
/// file is required.
Workspace load_workspace(const InputPaths& paths);

}  // namespace tdouble
