#pragma once

#include <numbers>
#include <optional>
#include <string>

#include "scaffold/errors.hpp"

namespace scaffold {

inline constexpr int kNumCords = 4;

// Cord numbering and anchor convention (fixed stand frame, origin at the
// lower-left pulley, x right, y up):
//   cord 0: anchor (0, A)  upper-left    -> platform corner upper-left
//   cord 1: anchor (B, A)  upper-right   -> platform corner upper-right
//   cord 2: anchor (0, 0)  lower-left    -> platform corner lower-left
//   cord 3: anchor (B, 0)  lower-right   -> platform corner lower-right
// Each cord attaches to the platform corner nearest its anchor at zero tilt.

// Physical parameters of the stand, platform, cables, and winches. SI units.
struct RigConfig {
  double stand_height = 0.70;           // A (m)
  double stand_width = 0.60;            // B (m)
  double platform_height = 0.028;       // a (m)
  double platform_width = 0.158;        // b (m)
  double platform_mass = 0.1;           // m (kg)
  double platform_inertia = 2.617e-4;   // Ip (kg m^2)
  double pulley_radius = 0.025;         // r (m)
  double pulley_inertia = 3.125e-5;     // I (kg m^2), motor+pulley reflected
  // Lumped viscous damping at the winch shaft, dominated by the driven DC
  // motor: stall torque over no-load speed is ~0.1 N m s/rad for the rated
  // 2 N m / 193 rpm unit; half of that as a conservative default.
  double viscous_damping = 0.05;       // c (N m s/rad)
  double dry_friction_torque = 0.01;    // tau0 (N m), Coulomb friction level
  double gravity = 9.81;                // g (m/s^2)
  double cable_stiffness = 1.0e4;       // k (N/m), axial stiffness of a cable
  double cable_damping = 10.0;          // d (N s/m), axial damping of a cable
  double torque_limit = 2.0;            // N m, actuator saturation
  double speed_limit = 193.0 * 2.0 * std::numbers::pi / 60.0;  // rad/s (193 rpm rating)

  // Throws ValidationError naming the offending field.
  void validate() const;
};

// Planar pose of the platform center.
struct Pose {
  double px = 0.0;     // m
  double py = 0.0;     // m
  double theta = 0.0;  // rad
};

// Pose plus first derivatives; the generalized coordinates of the simulation.
struct PlatformState {
  double px = 0.0;     // m
  double py = 0.0;     // m
  double theta = 0.0;  // rad
  double vx = 0.0;     // m/s
  double vy = 0.0;     // m/s
  double omega = 0.0;  // rad/s, d(theta)/dt

  Pose pose() const { return {px, py, theta}; }
};

// Geometric state of one cord. `angle` is the direction angle of the cord at
// its platform corner, measured against the horizontal toward the anchor
// (alpha/beta/gamma convention for cords 0..2, same form for cord 3); it lies
// in (0, pi/2) for poses inside the stand.
struct CordState {
  double length = 0.0;   // m, anchor-to-corner distance
  double rate = 0.0;     // m/s
  double angle = 0.0;    // rad
  double tension = 0.0;  // N, always >= 0
  bool slack = false;    // true iff tension == 0 within tolerance
};

// State of one winch motor. Positive shaft direction winds cable in
// (shortens the released length).
struct MotorState {
  double shaft_angle = 0.0;      // q (rad)
  double shaft_speed = 0.0;      // dq/dt (rad/s)
  double commanded_torque = 0.0; // tau (N m), post-saturation
  double released_length = 0.0;  // m, cable paid out by the winch
};

// A complete simulation case: rig, endpoints, motion profile, and gains.
struct Scenario {
  RigConfig rig;
  Pose start_pose;
  Pose end_pose;
  double cruise_speed = 0.05;  // Vp (m/s)
  double accel = 0.1;          // ap (m/s^2)
  double kp = 2000.0;          // N m per meter of length error
  double ki = 500.0;           // N m / (m s)
  std::optional<double> kp_experimental;  // metadata only, PWM-scaled gains
  std::optional<double> ki_experimental;
  double time_step = 1e-3;     // dt (s), also the control period
  double settle_time = 2.0;    // s, extra hold after the profile ends
  std::string output_path = "telemetry.csv";

  // Throws ValidationError; checks rig invariants, workspace membership of
  // both poses, and positivity of the motion/controller parameters.
  void validate() const;
};

// Net degrees of freedom of a planar linkage:
//   f = 3n - 2*j1 - j2 - 3
// with n links, j1 pin joints, j2 cylindrical joints.
int grubler_dof(int links, int pin_joints, int cylindrical_joints);

// Mobility of the shipped topology: platform + three taut rigid cords +
// ground (n = 5) with pin joints at both ends of each cord (j1 = 6).
// Returns 0: the pose is fully determined by three cord lengths.
int validate_mobility(const RigConfig& rig);

}  // namespace scaffold
