#ifndef FUZZYNAV_NAVIGATOR_HPP_
#define FUZZYNAV_NAVIGATOR_HPP_

#include "fuzzynav/inference.hpp"
#include "fuzzynav/kinematics.hpp"
#include "fuzzynav/rule_base.hpp"

namespace fuzzynav {

struct Goal {
  double x = 0.0;
  double y = 0.0;

  friend bool operator==(const Goal&, const Goal&) = default;
};

/// The controller inputs.
struct TrackingErrors {
  double distance = 0.0;  ///< e_d >= 0 (m)
  double angle = 0.0;     ///< e_theta in (-pi, pi] (rad), positive = goal to the left
};

/// Distance and bearing of the goal relative to the robot. A robot sitting
/// on the goal (distance < 1e-12) gets angle 0.
TrackingErrors compute_errors(const Pose& pose, const Goal& goal);

struct ControlOutput {
  WheelSpeeds wheels;
  bool zero_area = false;  ///< either output fell back to its midpoint
};

/// Goal-seeking controller: a validated rule base driving the two wheels.
class Navigator {
 public:
  /// Throws ValidationError if `rb` fails validate().
  explicit Navigator(RuleBase rb, CentroidOptions options = {});

  const RuleBase& rule_base() const { return rb_; }

  /// Raw errors go straight into the fuzzy system; clamping to the input
  /// universes happens during fuzzification.
  ControlOutput control_step(const TrackingErrors& errors) const;

 private:
  RuleBase rb_;
  CentroidOptions options_;
};

}  // namespace fuzzynav

#endif  // FUZZYNAV_NAVIGATOR_HPP_
