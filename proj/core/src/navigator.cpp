#include "fuzzynav/navigator.hpp"

#include <cmath>
#include <utility>

#include "fuzzynav/errors.hpp"

namespace fuzzynav {

TrackingErrors compute_errors(const Pose& pose, const Goal& goal) {
  const double dx = goal.x - pose.x;
  const double dy = goal.y - pose.y;
  const double distance = std::hypot(dx, dy);
  if (distance < 1e-12) return {distance, 0.0};
  return {distance, wrap_angle(std::atan2(dy, dx) - pose.theta)};
}

Navigator::Navigator(RuleBase rb, CentroidOptions options)
    : rb_(std::move(rb)), options_(options) {
  const auto issues = validate(rb_);
  if (!issues.empty()) {
    std::string message = "invalid rule base:";
    for (const auto& issue : issues) message += "\n  " + issue;
    throw ValidationError(message);
  }
}

ControlOutput Navigator::control_step(const TrackingErrors& errors) const {
  const InferenceResult out =
      infer(rb_, errors.angle, errors.distance, options_);
  return {WheelSpeeds{out.left, out.right},
          out.left_zero_area || out.right_zero_area};
}

}  // namespace fuzzynav
