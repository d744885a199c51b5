#include "fuzzynav/kinematics.hpp"

#include <cmath>
#include <numbers>

#include "fuzzynav/errors.hpp"

namespace fuzzynav {

namespace {
constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kEps = 1e-12;
}  // namespace

double wrap_angle(double theta) {
  if (theta > -kPi && theta <= kPi) return theta;
  double r = std::remainder(theta, kTwoPi);  // [-pi, pi]
  if (r <= -kPi) r += kTwoPi;
  if (r > kPi) r = kPi;
  return r;
}

void check_params(const RobotParams& p) {
  auto positive = [](double v) { return std::isfinite(v) && v > 0.0; };
  if (!positive(p.wheel_base)) {
    throw ValidationError("params.wheel_base must be > 0");
  }
  if (!positive(p.wheel_radius)) {
    throw ValidationError("params.wheel_radius must be > 0");
  }
  if (!positive(p.v_max)) throw ValidationError("params.v_max must be > 0");
}

Twist wheel_to_twist(const WheelSpeeds& ws, const RobotParams& p) {
  return {0.5 * (ws.right + ws.left), (ws.right - ws.left) / p.wheel_base};
}

double curvature_radius(const WheelSpeeds& ws, const RobotParams& p) {
  const double diff = ws.right - ws.left;
  if (std::abs(diff) < kEps) return kStraightLine;
  return p.wheel_base * (ws.right + ws.left) / (2.0 * diff);
}

WheelRates wheel_angular(const WheelSpeeds& ws, const RobotParams& p) {
  return {ws.left / p.wheel_radius, ws.right / p.wheel_radius};
}

Pose step_euler(const Pose& pose, const Twist& tw, double dt) {
  return {pose.x + tw.v * std::cos(pose.theta) * dt,
          pose.y + tw.v * std::sin(pose.theta) * dt,
          wrap_angle(pose.theta + tw.omega * dt)};
}

Pose step_exact(const Pose& pose, const Twist& tw, double dt) {
  if (std::abs(tw.omega) < kEps) return step_euler(pose, tw, dt);
  const double heading = pose.theta + tw.omega * dt;
  const double radius = tw.v / tw.omega;
  return {pose.x + radius * (std::sin(heading) - std::sin(pose.theta)),
          pose.y - radius * (std::cos(heading) - std::cos(pose.theta)),
          wrap_angle(heading)};
}

}  // namespace fuzzynav
