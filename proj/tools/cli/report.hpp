#ifndef FUZZYNAV_CLI_REPORT_HPP_
#define FUZZYNAV_CLI_REPORT_HPP_

#include <nlohmann/json.hpp>

#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "fuzzynav/simulation.hpp"

namespace fuzzynav::cli {

inline constexpr const char* kTrajectoryHeader =
    "t,x,y,theta,e_d,e_theta,v_l,v_r";

/// 9 significant digits, the precision of every number the CLI writes.
std::string format_value(double v);

/// One row per sample under kTrajectoryHeader, LF line endings.
void write_trajectory_csv(std::ostream& out,
                          std::span<const TrajectorySample> trajectory);

/// {reached, time_to_target, time_angle_aligned, path_length, rule_count};
/// absent times are null.
nlohmann::json metrics_to_json(const Metrics& m);

/// Whether the smaller controllers finished first in a built-in comparison.
struct OrderingCheck {
  bool evaluated = false;    ///< all three built-ins reached the goal
  bool three_fastest = false;
  bool strictly_increasing = false;  ///< t(3) < t(5) < t(7)
};

OrderingCheck check_ordering(std::span<const ComparisonRow> rows);

nlohmann::json comparison_to_json(std::span<const ComparisonRow> rows);
void write_comparison_csv(std::ostream& out,
                          std::span<const ComparisonRow> rows);

/// Fixed-width table for terminals.
void print_comparison_table(std::ostream& out,
                            std::span<const ComparisonRow> rows);

}  // namespace fuzzynav::cli

#endif  // FUZZYNAV_CLI_REPORT_HPP_
