// fuzzynav: run, compare, validate and export fuzzy goal-seeking controllers.

#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <string>

#include "cli/commands.hpp"

int main(int argc, char** argv) {
  using namespace fuzzynav::cli;

  CLI::App app{"Fuzzy goal-seeking navigation for a differential-drive robot"};
  app.require_subcommand(1);

  RunOptions run_opts;
  std::string run_controller;
  auto* run = app.add_subcommand("run", "Simulate one controller on a scenario");
  run->add_option("--scenario", run_opts.scenario, "Scenario file (YAML)")
      ->required();
  run->add_option("--controller", run_controller,
                  "3, 5, 7 or a rules file (overrides the scenario)");
  run->add_option("--out", run_opts.out_dir, "Output directory")->required();
  run->add_flag("--quiet", run_opts.quiet, "Suppress the report");

  CompareOptions cmp_opts;
  auto* compare =
      app.add_subcommand("compare", "Compare the 3/5/7-term controllers");
  compare->add_option("--scenario", cmp_opts.scenario, "Scenario file (YAML)")
      ->required();
  compare->add_option("--out", cmp_opts.out_dir, "Output directory")
      ->required();
  compare->add_flag("--quiet", cmp_opts.quiet, "Suppress the table");

  std::string rules_path;
  bool validate_quiet = false;
  auto* validate = app.add_subcommand("validate", "Check a rule file");
  validate->add_option("rules", rules_path, "Rule file")->required();
  validate->add_flag("--quiet", validate_quiet, "Only print diagnostics");

  std::string export_size;
  std::string export_out;
  auto* export_rules =
      app.add_subcommand("export-rules", "Write a built-in rule base");
  export_rules->add_option("--controller", export_size, "3, 5 or 7")
      ->required();
  export_rules->add_option("--out", export_out, "Output file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  const Streams io{std::cout, std::cerr};
  if (*run) {
    if (!run_controller.empty()) run_opts.controller = run_controller;
    return cmd_run(run_opts, io);
  }
  if (*compare) return cmd_compare(cmp_opts, io);
  if (*validate) return cmd_validate(rules_path, validate_quiet, io);
  return cmd_export_rules(export_size, export_out, io);
}
