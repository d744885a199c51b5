#include "commands.hpp"

#include <fstream>
#include <sstream>
#include <system_error>

#include "fuzzynav/rule_format.hpp"
#include "fuzzynav/scenario_file.hpp"
#include "report.hpp"

namespace fuzzynav::cli {

namespace {

bool write_file(const std::filesystem::path& path, const std::string& content,
                std::ostream& err) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (out) out << content;
  if (!out) {
    err << "error: cannot write " << path.string() << "\n";
    return false;
  }
  return true;
}

bool make_out_dir(const std::filesystem::path& dir, std::ostream& err) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec || !std::filesystem::is_directory(dir)) {
    err << "error: cannot create output directory " << dir.string() << "\n";
    return false;
  }
  return true;
}

std::optional<Scenario> read_scenario(const std::filesystem::path& path,
                                      std::ostream& err) {
  try {
    return load_scenario(path);
  } catch (const ValidationError& e) {
    err << "error: " << path.string() << ": " << e.what() << "\n";
    return std::nullopt;
  }
}

std::string trajectory_text(const RunResult& result) {
  std::ostringstream csv;
  write_trajectory_csv(csv, result.trajectory);
  return csv.str();
}

}  // namespace

int cmd_run(const RunOptions& options, Streams io, RunReport* report) {
  std::optional<Scenario> scenario = read_scenario(options.scenario, io.err);
  if (!scenario) return kExitUsage;
  if (options.controller) {
    try {
      scenario->controller = parse_controller(*options.controller);
    } catch (const ValidationError& e) {
      io.err << "error: --controller: " << e.what() << "\n";
      return kExitUsage;
    }
  }

  RunResult result;
  try {
    result = run(*scenario);
  } catch (const RuleFileError& e) {
    io.err << "error: " << e.what() << "\n";
    return kExitInvalidRules;
  } catch (const ValidationError& e) {
    io.err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  if (!make_out_dir(options.out_dir, io.err)) return kExitUsage;
  const auto trajectory_file = options.out_dir / "trajectory.csv";
  const auto metrics_file = options.out_dir / "metrics.json";
  if (!write_file(trajectory_file, trajectory_text(result), io.err) ||
      !write_file(metrics_file,
                  metrics_to_json(result.metrics).dump(2) + "\n", io.err)) {
    return kExitUsage;
  }

  if (!options.quiet) {
    io.out << "scenario:\n";
    std::istringstream echo(render_scenario(*scenario));
    for (std::string line; std::getline(echo, line);) {
      io.out << "  " << line << "\n";
    }
    io.out << "metrics: " << metrics_to_json(result.metrics).dump() << "\n";
    if (result.zero_area_steps > 0) {
      io.out << "warning: " << result.zero_area_steps
             << " control steps had an empty output aggregation\n";
    }
    io.out << "trajectory: " << trajectory_file.string() << "\n"
           << "metrics file: " << metrics_file.string() << "\n";
  }
  if (report) {
    *report = {*scenario, result.metrics, trajectory_file, metrics_file};
  }
  return result.metrics.reached ? kExitOk : kExitNotReached;
}

int cmd_compare(const CompareOptions& options, Streams io) {
  std::optional<Scenario> scenario = read_scenario(options.scenario, io.err);
  if (!scenario) return kExitUsage;

  const std::vector<ControllerChoice> controllers{
      RuleSetSize::Three, RuleSetSize::Five, RuleSetSize::Seven};
  const std::vector<ComparisonRow> rows = compare(*scenario, controllers);

  if (!make_out_dir(options.out_dir, io.err)) return kExitUsage;
  std::ostringstream csv;
  write_comparison_csv(csv, rows);
  bool ok = write_file(options.out_dir / "comparison.csv", csv.str(), io.err) &&
            write_file(options.out_dir / "comparison.json",
                       comparison_to_json(rows).dump(2) + "\n", io.err);
  for (const ComparisonRow& row : rows) {
    if (!ok) break;
    if (!row.result) continue;
    ok = write_file(options.out_dir / ("trajectory_" + row.controller + ".csv"),
                    trajectory_text(*row.result), io.err);
  }
  if (!ok) return kExitUsage;

  bool all_reached = true;
  for (const ComparisonRow& row : rows) {
    if (!row.result) {
      io.err << "error: controller " << row.controller << ": " << row.error
             << "\n";
    }
    all_reached = all_reached && row.result && row.result->metrics.reached;
  }

  if (!options.quiet) {
    print_comparison_table(io.out, rows);
    const OrderingCheck ordering = check_ordering(rows);
    if (!ordering.evaluated) {
      io.out << "ordering: not evaluated (not every controller reached the "
                "goal)\n";
    } else {
      io.out << "ordering: 3-term fastest: "
             << (ordering.three_fastest ? "yes" : "no")
             << "; t(3) < t(5) < t(7): "
             << (ordering.strictly_increasing ? "yes" : "no") << "\n";
    }
  }
  return all_reached ? kExitOk : kExitNotReached;
}

int cmd_validate(const std::filesystem::path& rules_path, bool quiet,
                 Streams io) {
  std::ifstream in(rules_path, std::ios::binary);
  if (!in) {
    io.err << "error: cannot read " << rules_path.string() << "\n";
    return kExitUsage;
  }
  std::ostringstream text;
  text << in.rdbuf();
  const ParseResult parsed = parse_rulebase(text.str());
  if (!parsed.ok()) {
    for (const Diagnostic& d : parsed.diagnostics) {
      io.err << rules_path.string() << (d.line > 0 ? ":" : ": ")
             << d.to_string() << "\n";
    }
    return kExitInvalidRules;
  }
  if (!quiet) {
    io.out << rules_path.string() << ": ok, " << parsed.rule_base->rules.size()
           << " rules\n";
  }
  return kExitOk;
}

int cmd_export_rules(const std::string& size, const std::filesystem::path& out,
                     Streams io) {
  const std::optional<RuleSetSize> rule_set =
      size.size() == 1 ? rule_set_size_from_int(size[0] - '0') : std::nullopt;
  if (!rule_set) {
    io.err << "error: unknown built-in controller '" << size
           << "' (valid choices: 3, 5, 7)\n";
    return kExitUsage;
  }
  if (!write_file(out, render_rulebase(builtin(*rule_set)), io.err)) {
    return kExitUsage;
  }
  return kExitOk;
}

}  // namespace fuzzynav::cli
