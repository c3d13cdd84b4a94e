#pragma once

#include <Eigen/Dense>
#include <array>
#include <vector>

#include "scaffold/control.hpp"
#include "scaffold/dynamics.hpp"
#include "scaffold/kinematics.hpp"
#include "scaffold/rig.hpp"
#include "scaffold/trajectory.hpp"

namespace scaffold {

// Full simulation state: continuous plant (platform + motors) plus the
// discrete controller bank.
struct SimState {
  PlatformState platform;
  std::array<MotorState, kNumCords> motors;
  std::array<PIState, kNumCords> controllers;
  double time = 0.0;  // s
};

// One logged sample; one record per control step, strictly increasing time.
struct TelemetryRecord {
  double t = 0.0;
  double px = 0.0, py = 0.0, th = 0.0;
  double px_ref = 0.0, py_ref = 0.0, th_ref = 0.0;
  std::array<double, kNumCords> length{};      // geometric cord lengths (m)
  std::array<double, kNumCords> length_ref{};  // reference lengths (m)
  std::array<double, kNumCords> tension{};     // N
  std::array<double, kNumCords> torque{};      // commanded (N m)
  std::array<double, kNumCords> motor_speed{}; // rad/s
  double power = 0.0;  // W, sum of |tau*omega|
};

// Raised when a run produces non-finite state or the platform leaves the
// stand by more than 5 cm; carries the last records for diagnosis.
struct SimulationAbort : NumericError {
  std::vector<TelemetryRecord> tail;
  SimulationAbort(const std::string& what, std::vector<TelemetryRecord> tail_records)
      : NumericError(what), tail(std::move(tail_records)) {}
};

// Unilateral stiff-spring cable force:
//   T = max(0, k*(geometric - released) + d*(geometric_rate - release_rate))
// and exactly 0 whenever the cable is slack (geometric < released).
double cable_tension(double geometric_length, double released_length,
                     double geometric_rate, double release_rate, const RigConfig& rig);

// Reference signals handed to the controller and logger at one instant.
struct References {
  Pose pose;
  Eigen::Vector3d pose_rates = Eigen::Vector3d::Zero();
  CordLengths lengths = CordLengths::Zero();
  CordLengths rates = CordLengths::Zero();
};

// References for time t, held at the end pose once the profile completes.
References references_at(const Scenario& scenario, const TrapezoidalProfile& profile,
                         double t);

// Time derivative of the continuous state under the current controller
// outputs: platform accelerations from the four cable tensions and gravity,
// shaft accelerations from the winch torque balance
//   q_dd = (tau - sgn(q_d)*tau0 - c*q_d - T*r) / I.
struct StateDerivative {
  Eigen::Vector3d platform_velocity = Eigen::Vector3d::Zero();
  Eigen::Vector3d platform_acceleration = Eigen::Vector3d::Zero();
  std::array<double, kNumCords> shaft_speed{};
  std::array<double, kNumCords> shaft_acceleration{};
};

StateDerivative derivatives(const SimState& state, const References& refs,
                            const RigConfig& rig);

// Closed-loop run: classical RK4 at the scenario time step over
// [0, total_time + settle_time], controller updated once per step and held
// across the RK4 substeps. Motors start pre-tensioned at the static solution.
std::vector<TelemetryRecord> run(const Scenario& scenario);

}  // namespace scaffold
