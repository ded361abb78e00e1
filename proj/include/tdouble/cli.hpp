#pragma once

#include <cstdint>
#include <string>

#include <json.hpp>

#include "tdouble/error.hpp"
#include "tdouble/io.hpp"
#include "tdouble/rep_decomp.hpp"

namespace tdouble {

struct RunOptions {
  std::string command;  // validate, tga, double, simples, dualpair, oracle
  std::string target;   // oracle only: center, associativity, regular-classes, simple-count
  InputPaths inputs;
  double tolerance = kDefaultTolerance;
  std::uint64_t seed = 1;
  bool timing = false;  // wall-clock timing breaks byte-identity, so it is opt-in
};

struct Report {
  nlohmann::json json;
  int exit_code = 0;  // 0 ok, 1 validation failure, 2 parse/crossref, 3 computation
};

/// Never throws for library errors; they become {"error": {...}} reports.
Report run(const RunOptions& options);

/// Sorted keys, doubles rounded to 12 significant digits, two-space indent.
std::string canonical_json(const nlohmann::json& j);

int exit_code_for(ErrorCode code);

}  // namespace tdouble
