#ifndef FUZZYNAV_KINEMATICS_HPP_
#define FUZZYNAV_KINEMATICS_HPP_

#include <limits>

namespace fuzzynav {

/// Wraps an angle into (-pi, pi]. Values already in range are returned
/// unchanged.
double wrap_angle(double theta);

/// Planar pose; theta is kept in (-pi, pi].
struct Pose {
  double x = 0.0;
  double y = 0.0;
  double theta = 0.0;

  friend bool operator==(const Pose&, const Pose&) = default;
};

/// Linear speeds of the wheel contact points, m/s.
struct WheelSpeeds {
  double left = 0.0;
  double right = 0.0;

  friend bool operator==(const WheelSpeeds&, const WheelSpeeds&) = default;
};

/// Body velocity: forward speed (m/s) and yaw rate (rad/s).
struct Twist {
  double v = 0.0;
  double omega = 0.0;

  friend bool operator==(const Twist&, const Twist&) = default;
};

struct RobotParams {
  double wheel_base = 0.5;    ///< L, distance between the wheels (m)
  double wheel_radius = 0.1;  ///< r (m)
  double v_max = 2.0;         ///< wheel speed cap (m/s)

  friend bool operator==(const RobotParams&, const RobotParams&) = default;
};

/// Throws ValidationError unless L, r and v_max are positive and finite.
void check_params(const RobotParams& p);

/// v = (v_r + v_l) / 2, omega = (v_r - v_l) / L.
Twist wheel_to_twist(const WheelSpeeds& ws, const RobotParams& p);

inline constexpr double kStraightLine = std::numeric_limits<double>::infinity();

/// Signed radius of the path of the axle midpoint, L (v_r + v_l) /
/// (2 (v_r - v_l)), positive when turning left. Returns kStraightLine when
/// the wheel speeds differ by less than 1e-12.
double curvature_radius(const WheelSpeeds& ws, const RobotParams& p);

struct WheelRates {
  double left = 0.0;   ///< rad/s
  double right = 0.0;  ///< rad/s
};

WheelRates wheel_angular(const WheelSpeeds& ws, const RobotParams& p);

/// Explicit Euler step of the unicycle model.
Pose step_euler(const Pose& pose, const Twist& tw, double dt);

/// Closed-form integration for a twist held constant over dt.
Pose step_exact(const Pose& pose, const Twist& tw, double dt);

}  // namespace fuzzynav

#endif  // FUZZYNAV_KINEMATICS_HPP_
