#include "report.hpp"

#include <fmt/format.h>

#include <string>

namespace fuzzynav::cli {

std::string format_value(double v) { return fmt::format("{:.9g}", v); }

namespace {

// Rounded through the 9-digit text form so JSON carries the same precision.
double rounded(double v) { return std::stod(format_value(v)); }

nlohmann::json optional_time(const std::optional<double>& t) {
  return t ? nlohmann::json(rounded(*t)) : nlohmann::json(nullptr);
}

std::string optional_cell(const std::optional<double>& t) {
  return t ? format_value(*t) : std::string();
}

const Metrics* metrics_of(const ComparisonRow& row) {
  return row.result ? &row.result->metrics : nullptr;
}

}  // namespace

void write_trajectory_csv(std::ostream& out,
                          std::span<const TrajectorySample> trajectory) {
  out << kTrajectoryHeader << '\n';
  for (const TrajectorySample& s : trajectory) {
    out << format_value(s.t) << ',' << format_value(s.pose.x) << ','
        << format_value(s.pose.y) << ',' << format_value(s.pose.theta) << ','
        << format_value(s.errors.distance) << ','
        << format_value(s.errors.angle) << ',' << format_value(s.wheels.left)
        << ',' << format_value(s.wheels.right) << '\n';
  }
}

nlohmann::json metrics_to_json(const Metrics& m) {
  nlohmann::json j;
  j["reached"] = m.reached;
  j["time_to_target"] = optional_time(m.time_to_target);
  j["time_angle_aligned"] = optional_time(m.time_angle_aligned);
  j["path_length"] = rounded(m.path_length);
  j["rule_count"] = m.rule_count;
  return j;
}

OrderingCheck check_ordering(std::span<const ComparisonRow> rows) {
  const Metrics* by_size[3] = {nullptr, nullptr, nullptr};
  for (const ComparisonRow& row : rows) {
    const Metrics* m = metrics_of(row);
    if (row.controller == "3") by_size[0] = m;
    if (row.controller == "5") by_size[1] = m;
    if (row.controller == "7") by_size[2] = m;
  }
  OrderingCheck check;
  for (const Metrics* m : by_size) {
    if (!m || !m->time_to_target) return check;
  }
  const double t3 = *by_size[0]->time_to_target;
  const double t5 = *by_size[1]->time_to_target;
  const double t7 = *by_size[2]->time_to_target;
  check.evaluated = true;
  check.three_fastest = t3 < t5 && t3 < t7;
  check.strictly_increasing = t3 < t5 && t5 < t7;
  return check;
}

nlohmann::json comparison_to_json(std::span<const ComparisonRow> rows) {
  nlohmann::json j;
  j["rows"] = nlohmann::json::array();
  for (const ComparisonRow& row : rows) {
    nlohmann::json r;
    r["controller"] = row.controller;
    if (const Metrics* m = metrics_of(row)) {
      r.update(metrics_to_json(*m));
    } else {
      r["error"] = row.error;
    }
    j["rows"].push_back(std::move(r));
  }
  const OrderingCheck ordering = check_ordering(rows);
  j["ordering"] = {{"evaluated", ordering.evaluated},
                   {"three_fastest", ordering.three_fastest},
                   {"strictly_increasing", ordering.strictly_increasing}};
  return j;
}

void write_comparison_csv(std::ostream& out,
                          std::span<const ComparisonRow> rows) {
  out << "controller,rule_count,reached,time_to_target,time_angle_aligned,"
         "path_length\n";
  for (const ComparisonRow& row : rows) {
    const Metrics* m = metrics_of(row);
    if (!m) {
      out << row.controller << ",,,,,\n";
      continue;
    }
    out << row.controller << ',' << m->rule_count << ','
        << (m->reached ? "true" : "false") << ','
        << optional_cell(m->time_to_target) << ','
        << optional_cell(m->time_angle_aligned) << ','
        << format_value(m->path_length) << '\n';
  }
}

void print_comparison_table(std::ostream& out,
                            std::span<const ComparisonRow> rows) {
  out << fmt::format("{:<12} {:>6} {:>8} {:>14} {:>14} {:>12}\n", "controller",
                     "rules", "reached", "t_target [s]", "t_aligned [s]",
                     "path [m]");
  for (const ComparisonRow& row : rows) {
    const Metrics* m = metrics_of(row);
    if (!m) {
      out << fmt::format("{:<12} failed: {}\n", row.controller, row.error);
      continue;
    }
    auto time = [](const std::optional<double>& t) {
      return t ? fmt::format("{:.2f}", *t) : std::string("-");
    };
    out << fmt::format("{:<12} {:>6} {:>8} {:>14} {:>14} {:>12.3f}\n",
                       row.controller, m->rule_count,
                       m->reached ? "yes" : "no", time(m->time_to_target),
                       time(m->time_angle_aligned), m->path_length);
  }
}

}  // namespace fuzzynav::cli
