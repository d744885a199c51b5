#ifndef FUZZYNAV_SCENARIO_FILE_HPP_
#define FUZZYNAV_SCENARIO_FILE_HPP_

#include <filesystem>
#include <string>
#include <string_view>

#include "fuzzynav/errors.hpp"
#include "fuzzynav/simulation.hpp"

namespace fuzzynav {

/// Malformed scenario document. line() is 1-based, 0 if unknown.
class ScenarioError : public ValidationError {
 public:
  ScenarioError(int line, const std::string& message);
  int line() const { return line_; }

 private:
  int line_;
};

// YAML mapping with exactly the Scenario fields; every key except `goal` is
// optional and unknown keys are rejected:
//
//   start: {x: 0, y: 0, theta: 0}
//   goal: {x: 17.26, y: 17.26}
//   dt: 0.1
//   max_time: 120
//   goal_tol: 0.1
//   angle_tol: 0.05
//   params: {wheel_base: 0.5, wheel_radius: 0.1, v_max: 2.0}
//   controller: 3          # 3, 5, 7 or a rules file path

/// Relative rule-file paths resolve against base_dir. The result passes
/// check_scenario().
Scenario parse_scenario(std::string_view text,
                        const std::filesystem::path& base_dir = {});

Scenario load_scenario(const std::filesystem::path& path);

/// Inverse of parse_scenario, with full-precision numbers.
std::string render_scenario(const Scenario& sc);

}  // namespace fuzzynav

#endif  // FUZZYNAV_SCENARIO_FILE_HPP_
