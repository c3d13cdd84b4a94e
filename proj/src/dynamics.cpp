#include "scaffold/dynamics.hpp"

#include <cmath>
#include <optional>
#include <sstream>

namespace scaffold {

namespace {

double sgn(double x) { return (x > 0.0) ? 1.0 : (x < 0.0) ? -1.0 : 0.0; }

struct TripleSolve {
  Eigen::Vector3d tensions;
  double min_tension;
};

// Solves the 3x3 wrench system for one candidate taut triple.
std::optional<TripleSolve> solve_triple(const WrenchBalance& wb,
                                        const std::array<int, 3>& triple,
                                        const Eigen::Vector3d& rhs) {
  Eigen::Matrix3d m;
  for (int k = 0; k < 3; ++k) {
    const int i = triple[k];
    m(0, k) = wb.unit_direction[i].x();
    m(1, k) = wb.unit_direction[i].y();
    m(2, k) = wb.moment_arm[i];
  }
  const Eigen::JacobiSVD<Eigen::Matrix3d> svd(m, Eigen::ComputeFullU | Eigen::ComputeFullV);
  const double smax = svd.singularValues().maxCoeff();
  const double smin = svd.singularValues().minCoeff();
  if (smin <= smax * 1e-12) {
    return std::nullopt;  // singular triple
  }
  const Eigen::Vector3d t = svd.solve(rhs);
  return TripleSolve{t, t.minCoeff()};
}

}  // namespace

WrenchBalance wrench_of_tensions(const Pose& pose, const RigConfig& rig,
                                 const Eigen::Vector4d& tensions) {
  WrenchBalance out;
  Eigen::Vector2d force{0.0, -rig.platform_mass * rig.gravity};
  double moment = 0.0;
  for (int i = 0; i < kNumCords; ++i) {
    const Eigen::Vector2d anchor = anchor_position(rig, i);
    const Eigen::Vector2d corner = corner_position(pose, rig, i);
    const Eigen::Vector2d d = anchor - corner;
    const double length = d.norm();
    if (length < kDegenerateLength) {
      throw NumericError("wrench: cord " + std::to_string(i + 1) + " has zero length");
    }
    const Eigen::Vector2d unit = d / length;
    const Eigen::Vector2d arm_vec = corner - Eigen::Vector2d{pose.px, pose.py};
    const double arm = arm_vec.x() * unit.y() - arm_vec.y() * unit.x();
    out.unit_direction[i] = unit;
    out.moment_arm[i] = arm;
    force += tensions[i] * unit;
    moment += tensions[i] * arm;
  }
  out.net_force = force;
  out.net_moment = moment;
  return out;
}

TensionSolution solve_static_tensions(const Pose& pose, const RigConfig& rig,
                                      const Eigen::Vector3d& desired_accel) {
  constexpr double kFeasibilityTol = -1e-9;  // N
  const WrenchBalance wb = wrench_of_tensions(pose, rig, Eigen::Vector4d::Zero());
  const Eigen::Vector3d rhs{
      rig.platform_mass * desired_accel.x(),
      rig.platform_mass * (desired_accel.y() + rig.gravity),
      rig.platform_inertia * desired_accel.z()};

  const std::array<std::array<int, 3>, 2> candidates{{{0, 1, 2}, {0, 1, 3}}};
  std::array<std::optional<TripleSolve>, 2> solves;
  bool any_solvable = false;
  for (int c = 0; c < 2; ++c) {
    solves[c] = solve_triple(wb, candidates[c], rhs);
    any_solvable = any_solvable || solves[c].has_value();
  }
  if (!any_solvable) {
    throw NumericError("static tensions: both candidate triples are singular at this pose");
  }

  const bool feasible0 = solves[0] && solves[0]->min_tension >= kFeasibilityTol;
  const bool feasible1 = solves[1] && solves[1]->min_tension >= kFeasibilityTol;
  int choice;
  if (feasible0 && feasible1) {
    // Half-plane tie-break: drop the lower-right cord on the left half.
    choice = (pose.px < rig.stand_width / 2.0) ? 0 : 1;
  } else if (feasible0) {
    choice = 0;
  } else if (feasible1) {
    choice = 1;
  } else {
    std::ostringstream msg;
    msg << "static tensions: pose (" << pose.px << ", " << pose.py << ", " << pose.theta
        << ") is statically unsupportable (negative tension in every candidate triple)";
    throw NumericError(msg.str());
  }

  TensionSolution out;
  out.taut_set = candidates[choice];
  out.slack_index = (choice == 0) ? 3 : 2;
  for (int k = 0; k < 3; ++k) {
    out.tensions[out.taut_set[k]] = std::max(0.0, solves[choice]->tensions[k]);
  }
  out.tensions[out.slack_index] = 0.0;
  return out;
}

double actuator_torque(const MotorState& motor, double shaft_accel, double tension,
                       const RigConfig& rig, TorqueModel model) {
  const double base = sgn(motor.shaft_speed) * rig.dry_friction_torque +
                      rig.viscous_damping * motor.shaft_speed + tension * rig.pulley_radius;
  if (model == TorqueModel::kLegacy) {
    return base - (rig.pulley_inertia / rig.pulley_radius) * shaft_accel;
  }
  return base + rig.pulley_inertia * shaft_accel;
}

double mechanical_power(const Eigen::Vector4d& torques, const Eigen::Vector4d& speeds) {
  double total = 0.0;
  for (int i = 0; i < kNumCords; ++i) {
    total += std::abs(torques[i] * speeds[i]);
  }
  return total;
}

}  // namespace scaffold
