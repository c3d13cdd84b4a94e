#pragma once

#include <Eigen/Dense>
#include <array>

#include "scaffold/kinematics.hpp"
#include "scaffold/rig.hpp"

namespace scaffold {

// Net force and moment on the platform from a set of cable tensions plus
// gravity, together with the per-cord geometry used to assemble them.
struct WrenchBalance {
  Eigen::Vector2d net_force = Eigen::Vector2d::Zero();  // N
  double net_moment = 0.0;                               // N m about the center
  // Unit direction of each cord's pull: from platform corner toward anchor.
  std::array<Eigen::Vector2d, kNumCords> unit_direction{};
  // Signed perpendicular moment arm of each cord about the center (m);
  // moment_i = tension_i * moment_arm_i.
  std::array<double, kNumCords> moment_arm{};
};

// Tensions resolving the static (or prescribed-acceleration) force balance.
struct TensionSolution {
  Eigen::Vector4d tensions = Eigen::Vector4d::Zero();  // N, all >= 0
  std::array<int, 3> taut_set{};                       // cord indices solved
  int slack_index = 0;                                 // the redundant cord, tension exactly 0
};

// Assembles the platform wrench for arbitrary tensions:
//   net force  = sum_i T_i * u_i - (0, m g)
//   net moment = sum_i (corner_i - center) x (T_i * u_i)
// For the taut triple {0,1,2} this reduces term-for-term to the closed-form
// trig expansion in the cord angles (asserted in tests).
WrenchBalance wrench_of_tensions(const Pose& pose, const RigConfig& rig,
                                 const Eigen::Vector4d& tensions);

// Solves the 3x3 tension system so the net wrench equals
// (m*ax, m*(ay + g), Ip*atheta) for `desired_accel` = (ax, ay, atheta).
// Both upper cords stay taut; the candidate triples are {0,1,2} and {0,1,3}.
// Feasibility (all tensions >= 0) decides; when both triples qualify the
// half-plane tie-break drops cord 3 for px < B/2 and cord 2 otherwise.
// Throws NumericError when no triple is feasible or the system is singular.
TensionSolution solve_static_tensions(const Pose& pose, const RigConfig& rig,
                                      const Eigen::Vector3d& desired_accel);

// Inertial-term convention for the winch torque model. The legacy form uses
// -(I/r)*q_dd as printed in the original design notes (dimensionally a force
// scaled by 1/r); the consistent form uses the proper +I*q_dd reaction.
// Both agree whenever the shaft acceleration is zero.
enum class TorqueModel { kLegacy, kConsistent };

// Winch torque required to produce the given motion against a cable tension:
//   tau = sgn(q_d)*tau0 + c*q_d + T*r + inertial term per the model.
// sgn(0) = 0 (no static friction at rest).
double actuator_torque(const MotorState& motor, double shaft_accel, double tension,
                       const RigConfig& rig, TorqueModel model);

// Total mechanical power magnitude: sum_i |tau_i * omega_i|.
double mechanical_power(const Eigen::Vector4d& torques, const Eigen::Vector4d& speeds);

}  // namespace scaffold
