#ifndef FUZZYNAV_SIMULATION_HPP_
#define FUZZYNAV_SIMULATION_HPP_

#include <filesystem>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "fuzzynav/errors.hpp"
#include "fuzzynav/kinematics.hpp"
#include "fuzzynav/navigator.hpp"
#include "fuzzynav/rule_base.hpp"

namespace fuzzynav {

/// A built-in controller or a rule file on disk.
using ControllerChoice = std::variant<RuleSetSize, std::filesystem::path>;

/// "3", "5", "7" or the rule file path.
std::string controller_name(const ControllerChoice& choice);

/// Parses "3" / "5" / "7" or a path to an existing file (relative paths are
/// resolved against base_dir). Throws ValidationError naming the valid
/// choices otherwise.
ControllerChoice parse_controller(const std::string& text,
                                  const std::filesystem::path& base_dir = {});

struct Scenario {
  Pose start;
  Goal goal;
  double dt = 0.1;
  double max_time = 120.0;
  double goal_tol = 0.1;
  double angle_tol = 0.05;
  RobotParams params;
  ControllerChoice controller = RuleSetSize::Three;
};

/// Throws ValidationError naming the first offending field.
void check_scenario(const Scenario& sc);

inline constexpr double kBenchmarkDistance = 24.41;
inline constexpr double kBenchmarkBearingDeg = 45.0;

/// Start at the origin facing +x, goal kBenchmarkDistance away at the given
/// bearing, defaults everywhere else.
Scenario benchmark_scenario(RuleSetSize size = RuleSetSize::Three,
                            double bearing_deg = kBenchmarkBearingDeg);

/// Universes for the built-in controllers: distance up to half the initial
/// goal distance (at least 1 m), speed up to params.v_max.
DefaultLayout layout_for(const Scenario& sc);

/// A rules file that is unreadable or fails parse/validation. what() lists
/// the diagnostics one per line.
class RuleFileError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

/// The rule base a scenario's controller resolves to. Rule files are parsed
/// and validated; failures throw RuleFileError.
RuleBase load_controller(const Scenario& sc);

struct TrajectorySample {
  double t = 0.0;
  Pose pose;
  TrackingErrors errors;
  WheelSpeeds wheels;  ///< command applied over [t, t + dt); zero at the end
};

struct Metrics {
  bool reached = false;
  std::optional<double> time_to_target;
  std::optional<double> time_angle_aligned;
  double path_length = 0.0;
  int rule_count = 0;

  friend bool operator==(const Metrics&, const Metrics&) = default;
};

struct RunResult {
  std::vector<TrajectorySample> trajectory;
  Metrics metrics;
  int zero_area_steps = 0;  ///< control steps where defuzzification fell back
};

/// Closed-loop simulation. Each step: measure errors, record, stop if the
/// goal is within goal_tol or max_time is reached, otherwise actuate and
/// advance with an Euler step. Sample k has t = k * dt.
RunResult run(const Scenario& sc);
RunResult run(const Scenario& sc, const RuleBase& rb);

struct ComparisonRow {
  std::string controller;
  std::optional<RunResult> result;  ///< empty if the run failed
  std::string error;
};

/// Runs every controller on the same scenario, concurrently. Rows follow the
/// order of `controllers`.
std::vector<ComparisonRow> compare(const Scenario& scenario_template,
                                   const std::vector<ControllerChoice>& controllers);

}  // namespace fuzzynav

#endif  // FUZZYNAV_SIMULATION_HPP_
