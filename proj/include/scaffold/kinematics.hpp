#pragma once

#include <Eigen/Dense>
#include <array>

#include "scaffold/rig.hpp"

namespace scaffold {

// Corners must keep this clearance to every stand wall for a pose to count
// as inside the workspace; keeps cord lengths and angles well-conditioned.
inline constexpr double kWorkspaceMargin = 0.005;  // m

// Below this anchor-to-corner distance the cord direction is undefined.
inline constexpr double kDegenerateLength = 1e-6;  // m

using CordLengths = Eigen::Vector4d;
// Row i holds dL_i/d(px, py, theta); the (px, py) sub-row is the unit
// direction from anchor toward corner.
using CordJacobian = Eigen::Matrix<double, 4, 3>;

// Fixed anchor (pulley) position of a cord on the stand.
Eigen::Vector2d anchor_position(const RigConfig& rig, int cord);

// Body-frame offset of the platform corner serving a cord.
Eigen::Vector2d corner_offset(const RigConfig& rig, int cord);

Eigen::Vector2d corner_position(const Pose& pose, const RigConfig& rig, int cord);

struct CornerKinematics {
  Eigen::Vector2d position = Eigen::Vector2d::Zero();      // m
  Eigen::Vector2d velocity = Eigen::Vector2d::Zero();      // m/s
  Eigen::Vector2d acceleration = Eigen::Vector2d::Zero();  // m/s^2
};

// Closed-form corner position and derivatives; `pose_accel` is
// (d2px/dt2, d2py/dt2, d2theta/dt2).
CornerKinematics corner_kinematics(const PlatformState& state,
                                   const Eigen::Vector3d& pose_accel,
                                   const RigConfig& rig, int cord);

// Length and direction angle of one cord (rate/tension fields left zero).
// Throws NumericError when the corner coincides with the anchor.
CordState cord_geometry(const Pose& pose, const RigConfig& rig, int cord);

struct CordRates {
  double rate = 0.0;   // dL/dt (m/s)
  double accel = 0.0;  // d2L/dt2 (m/s^2)
};

// First and second time derivatives of the cord length along a platform
// motion. Throws NumericError near zero length.
CordRates cord_rates(const PlatformState& state, const Eigen::Vector3d& pose_accel,
                     const RigConfig& rig, int cord);

struct PulleyRates {
  double speed = 0.0;  // omega (rad/s), positive winds cable in
  double accel = 0.0;  // d(omega)/dt (rad/s^2)
};

// Winch mapping: omega = -(dL/dt)/r, d(omega)/dt = -(d2L/dt2)/r.
PulleyRates pulley_map(double cord_rate, double cord_accel, const RigConfig& rig);

// All four cord lengths for a pose. Throws ValidationError if the pose is
// outside the workspace.
CordLengths inverse_kinematics(const Pose& pose, const RigConfig& rig);

CordJacobian cord_jacobian(const Pose& pose, const RigConfig& rig);

// Recovers the pose from three prescribed cord lengths by damped Newton
// iteration on the length residuals. Converges to residual norms below
// 1e-12 m (pose accurate to well under 1e-9). Throws NumericError on
// non-convergence or when the 3x3 Jacobian condition number exceeds 1e8.
Pose forward_kinematics(const Eigen::Vector3d& lengths, const std::array<int, 3>& cords,
                        const RigConfig& rig, const Pose& guess);

// True when all four corners are strictly inside the stand rectangle with
// kWorkspaceMargin clearance.
bool pose_in_workspace(const Pose& pose, const RigConfig& rig);

}  // namespace scaffold
