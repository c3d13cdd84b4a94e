#pragma once

#include <Eigen/Dense>
#include <vector>

#include "scaffold/kinematics.hpp"
#include "scaffold/rig.hpp"

namespace scaffold {

// Trapezoidal speed profile over a straight path: ramp at `accel` to
// `cruise_speed`, cruise, ramp back down. Degenerates to a triangular
// profile (t_cruise == 0, peak below cruise_speed) when the path is too
// short to reach cruise speed.
struct TrapezoidalProfile {
  double path_length = 0.0;   // m
  double cruise_speed = 0.0;  // m/s, commanded ceiling
  double accel = 0.0;         // m/s^2
  double t_accel = 0.0;       // s, ramp duration
  double t_cruise = 0.0;      // s
  double total_time = 0.0;    // s, = 2*t_accel + t_cruise
  bool triangular = false;

  double peak_speed() const { return accel * t_accel; }

  // Speed and traveled arc length at time t in [0, total_time].
  double speed(double t) const;
  double distance(double t) const;
  // Arc-length fraction in [0, 1]; 1 for a zero-length profile.
  double fraction(double t) const;
};

TrapezoidalProfile plan_profile(double distance, double cruise_speed, double accel);

// Reference pose, pose rates, and pose accelerations at one instant.
struct PoseReference {
  Pose pose;
  Eigen::Vector3d rates = Eigen::Vector3d::Zero();          // (vx, vy, omega)
  Eigen::Vector3d accelerations = Eigen::Vector3d::Zero();  // (ax, ay, alpha)
};

// Straight-line interpolation between the poses along the profile's
// arc-length fraction; theta follows the same normalized profile, so its
// rate is trapezoidal as well. Throws ValidationError for t outside
// [0, total_time].
PoseReference pose_at(const TrapezoidalProfile& profile, const Pose& start,
                      const Pose& end, double t);

// Distance parameter used to plan the profile: the translation distance, or
// |d(theta)| * (platform half-diagonal) as a surrogate for pure rotations.
double profile_distance(const Pose& start, const Pose& end, const RigConfig& rig);

// Sampled reference trajectory: poses on the dt grid (plus the exact final
// time) mapped through the inverse kinematics to per-cord lengths and rates.
struct ReferenceSeries {
  std::vector<double> time;          // s
  std::vector<Pose> poses;
  std::vector<CordLengths> lengths;  // m
  std::vector<CordLengths> rates;    // m/s
};

// Throws ValidationError naming the first offending time if any sampled
// pose leaves the workspace.
ReferenceSeries reference_series(const Scenario& scenario);

}  // namespace scaffold
