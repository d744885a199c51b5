#include "fuzzynav/simulation.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <future>
#include <numbers>
#include <sstream>

#include "fuzzynav/errors.hpp"
#include "fuzzynav/rule_format.hpp"

namespace fuzzynav {

std::string controller_name(const ControllerChoice& choice) {
  if (const auto* size = std::get_if<RuleSetSize>(&choice)) {
    return std::string(to_string(*size));
  }
  return std::get<std::filesystem::path>(choice).string();
}

ControllerChoice parse_controller(const std::string& text,
                                  const std::filesystem::path& base_dir) {
  if (text == "3") return RuleSetSize::Three;
  if (text == "5") return RuleSetSize::Five;
  if (text == "7") return RuleSetSize::Seven;
  std::filesystem::path path(text);
  if (path.is_relative() && !base_dir.empty()) path = base_dir / path;
  std::error_code ec;
  if (!text.empty() && std::filesystem::is_regular_file(path, ec)) return path;
  throw ValidationError("unknown controller '" + text +
                        "' (valid choices: 3, 5, 7, or a path to a rules file)");
}

void check_scenario(const Scenario& sc) {
  auto finite = [](double v) { return std::isfinite(v); };
  if (!finite(sc.start.x) || !finite(sc.start.y) || !finite(sc.start.theta)) {
    throw ValidationError("start must be finite");
  }
  if (!finite(sc.goal.x) || !finite(sc.goal.y)) {
    throw ValidationError("goal must be finite");
  }
  if (!finite(sc.dt) || !(sc.dt > 0.0)) throw ValidationError("dt must be > 0");
  if (!finite(sc.max_time) || !(sc.max_time >= sc.dt)) {
    throw ValidationError("max_time must be >= dt");
  }
  if (!finite(sc.goal_tol) || !(sc.goal_tol > 0.0)) {
    throw ValidationError("goal_tol must be > 0");
  }
  if (!finite(sc.angle_tol) || !(sc.angle_tol > 0.0)) {
    throw ValidationError("angle_tol must be > 0");
  }
  check_params(sc.params);
}

Scenario benchmark_scenario(RuleSetSize size, double bearing_deg) {
  const double bearing = bearing_deg * std::numbers::pi / 180.0;
  Scenario sc;
  sc.goal = {kBenchmarkDistance * std::cos(bearing),
             kBenchmarkDistance * std::sin(bearing)};
  sc.controller = size;
  return sc;
}

DefaultLayout layout_for(const Scenario& sc) {
  const double initial =
      std::hypot(sc.goal.x - sc.start.x, sc.goal.y - sc.start.y);
  return {std::max(0.5 * initial, 1.0), sc.params.v_max};
}

RuleBase load_controller(const Scenario& sc) {
  if (const auto* size = std::get_if<RuleSetSize>(&sc.controller)) {
    return builtin(*size, layout_for(sc));
  }
  const auto& path = std::get<std::filesystem::path>(sc.controller);
  std::ifstream in(path, std::ios::binary);
  if (!in) throw RuleFileError("cannot read rules file " + path.string());
  std::ostringstream text;
  text << in.rdbuf();
  ParseResult parsed = parse_rulebase(text.str());
  if (!parsed.ok()) {
    std::string message = "invalid rules file " + path.string() + ":";
    for (const Diagnostic& d : parsed.diagnostics) {
      message += "\n  " + d.to_string();
    }
    throw RuleFileError(message);
  }
  return std::move(*parsed.rule_base);
}

RunResult run(const Scenario& sc) {
  check_scenario(sc);
  return run(sc, load_controller(sc));
}

RunResult run(const Scenario& sc, const RuleBase& rb) {
  check_scenario(sc);
  const Navigator navigator(rb);

  RunResult result;
  result.metrics.rule_count = static_cast<int>(rb.rules.size());
  // Last admissible step index; the epsilon absorbs max_time / dt rounding.
  const auto last_step =
      static_cast<long long>(std::floor(sc.max_time / sc.dt + 1e-9));

  Pose pose = sc.start;
  pose.theta = wrap_angle(pose.theta);
  for (long long k = 0;; ++k) {
    const double t = static_cast<double>(k) * sc.dt;
    const TrackingErrors errors = compute_errors(pose, sc.goal);
    if (!result.metrics.time_angle_aligned &&
        std::abs(errors.angle) <= sc.angle_tol) {
      result.metrics.time_angle_aligned = t;
    }
    if (errors.distance <= sc.goal_tol) {
      result.trajectory.push_back({t, pose, errors, {}});
      result.metrics.reached = true;
      result.metrics.time_to_target = t;
      break;
    }
    if (k >= last_step) {
      result.trajectory.push_back({t, pose, errors, {}});
      break;
    }

    const ControlOutput control = navigator.control_step(errors);
    if (control.zero_area) ++result.zero_area_steps;
    result.trajectory.push_back({t, pose, errors, control.wheels});

    const Pose next =
        step_euler(pose, wheel_to_twist(control.wheels, sc.params), sc.dt);
    result.metrics.path_length += std::hypot(next.x - pose.x, next.y - pose.y);
    pose = next;
  }
  return result;
}

std::vector<ComparisonRow> compare(
    const Scenario& scenario_template,
    const std::vector<ControllerChoice>& controllers) {
  std::vector<std::future<RunResult>> pending;
  pending.reserve(controllers.size());
  for (const ControllerChoice& choice : controllers) {
    Scenario sc = scenario_template;
    sc.controller = choice;
    pending.push_back(std::async(std::launch::async,
                                 [sc = std::move(sc)] { return run(sc); }));
  }

  std::vector<ComparisonRow> rows;
  rows.reserve(controllers.size());
  for (std::size_t i = 0; i < controllers.size(); ++i) {
    ComparisonRow row{controller_name(controllers[i]), std::nullopt, {}};
    try {
      row.result = pending[i].get();
    } catch (const std::exception& e) {
      row.error = e.what();
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace fuzzynav
