#include <cstdio>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "tdouble/cli.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Twisted group algebras, generalized doubles and their representations"};
  app.require_subcommand(1);
  tdouble::RunOptions o;
  std::string json_out;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--group", o.inputs.group, "Group file (table or permutations)")->required();
    sub->add_option("--gset", o.inputs.gset, "Right G-set file");
    sub->add_option("--cocycle", o.inputs.cocycle, "Cocycle or set cocycle file");
    sub->add_option("--family", o.inputs.family, "Stable family file");
    sub->add_option("--tolerance", o.tolerance, "Numeric tolerance")->check(CLI::PositiveNumber);
    sub->add_option("--seed", o.seed, "Seed for randomized steps");
    sub->add_option("--json", json_out, "Also write the report here");
    sub->add_flag("--timing", o.timing, "Record wall-clock time in the report");
  };
  for (const char* name : {"validate", "tga", "double", "simples", "dualpair"}) {
    add_common(app.add_subcommand(name, std::string("Run ") + name));
  }
  auto* oracle = app.add_subcommand("oracle", "Brute-force cross-checks");
  oracle->add_option("target", o.target, "center | associativity | regular-classes | simple-count")
      ->required()
      ->check(CLI::IsMember({"center", "associativity", "regular-classes", "simple-count"}));
  add_common(oracle);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  o.command = app.get_subcommands().front()->get_name();

  const tdouble::Report report = tdouble::run(o);
  const std::string text = tdouble::canonical_json(report.json);
  std::cout << text;
  if (!json_out.empty()) {
    std::ofstream f(json_out, std::ios::binary);
    if (!f) {
      std::cerr << "cannot write " << json_out << "\n";
      return 3;
    }
    f << text;
  }
  if (report.json.contains("error")) {
    std::cerr << report.json["error"]["code"].get<std::string>() << ": "
              << report.json["error"]["message"].get<std::string>() << "\n";
  }
  return report.exit_code;
}
