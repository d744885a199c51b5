#ifndef FUZZYNAV_CLI_COMMANDS_HPP_
#define FUZZYNAV_CLI_COMMANDS_HPP_

#include <filesystem>
#include <optional>
#include <ostream>
#include <string>

#include "fuzzynav/simulation.hpp"

namespace fuzzynav::cli {

// Exit-code contract shared by every command.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitNotReached = 2;
inline constexpr int kExitInvalidRules = 3;

struct Streams {
  std::ostream& out;
  std::ostream& err;
};

struct RunOptions {
  std::filesystem::path scenario;
  std::optional<std::string> controller;  ///< overrides the scenario's
  std::filesystem::path out_dir;
  bool quiet = false;
};

struct RunReport {
  Scenario scenario;
  Metrics metrics;
  std::filesystem::path trajectory_file;
  std::filesystem::path metrics_file;
};

/// Writes <out>/trajectory.csv and <out>/metrics.json. Exit 0 when the goal
/// is reached, 2 when it is not, 1 on usage/config errors and 3 when a
/// controller rules file fails validation.
int cmd_run(const RunOptions& options, Streams io,
            RunReport* report = nullptr);

struct CompareOptions {
  std::filesystem::path scenario;
  std::filesystem::path out_dir;
  bool quiet = false;
};

/// Runs the 3/5/7 built-ins on the scenario. Writes comparison.csv,
/// comparison.json and trajectory_<n>.csv per controller, and prints a table.
/// Exit 0 if every controller reached the goal, 2 otherwise.
int cmd_compare(const CompareOptions& options, Streams io);

/// Exit 0 iff the file parses and validates; diagnostics go to io.err as
/// "<path>:<line>:<col>: message", exit 3. Unreadable file: exit 1.
int cmd_validate(const std::filesystem::path& rules_path, bool quiet,
                 Streams io);

/// Writes the built-in rule base ("3", "5" or "7") in canonical form.
int cmd_export_rules(const std::string& size, const std::filesystem::path& out,
                     Streams io);

}  // namespace fuzzynav::cli

#endif  // FUZZYNAV_CLI_COMMANDS_HPP_
