#include "scaffold/kinematics.hpp"

#include <cmath>
#include <sstream>

namespace scaffold {

namespace {

void check_cord_index(int cord) {
  if (cord < 0 || cord >= kNumCords) {
    throw ValidationError("cord index out of range: " + std::to_string(cord));
  }
}

// Sign pattern (sx, sy) of each cord's pull direction: the unit vector from
// corner toward anchor is (sx*cos(angle), sy*sin(angle)).
constexpr double kSignX[kNumCords] = {-1.0, +1.0, -1.0, +1.0};
constexpr double kSignY[kNumCords] = {+1.0, +1.0, -1.0, -1.0};

// d(corner)/d(theta) in the world frame.
Eigen::Vector2d corner_theta_derivative(const Eigen::Vector2d& offset, double theta) {
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  return {-offset.x() * s - offset.y() * c, offset.x() * c - offset.y() * s};
}

}  // namespace

Eigen::Vector2d anchor_position(const RigConfig& rig, int cord) {
  check_cord_index(cord);
  const double ax = (cord == 1 || cord == 3) ? rig.stand_width : 0.0;
  const double ay = (cord == 0 || cord == 1) ? rig.stand_height : 0.0;
  return {ax, ay};
}

Eigen::Vector2d corner_offset(const RigConfig& rig, int cord) {
  check_cord_index(cord);
  const double u = (cord == 1 || cord == 3) ? rig.platform_width / 2.0 : -rig.platform_width / 2.0;
  const double v = (cord == 0 || cord == 1) ? rig.platform_height / 2.0 : -rig.platform_height / 2.0;
  return {u, v};
}

Eigen::Vector2d corner_position(const Pose& pose, const RigConfig& rig, int cord) {
  const Eigen::Vector2d off = corner_offset(rig, cord);
  const double c = std::cos(pose.theta);
  const double s = std::sin(pose.theta);
  return {pose.px + off.x() * c - off.y() * s, pose.py + off.x() * s + off.y() * c};
}

CornerKinematics corner_kinematics(const PlatformState& state,
                                   const Eigen::Vector3d& pose_accel,
                                   const RigConfig& rig, int cord) {
  const Eigen::Vector2d off = corner_offset(rig, cord);
  const double c = std::cos(state.theta);
  const double s = std::sin(state.theta);
  const Eigen::Vector2d world_off{off.x() * c - off.y() * s, off.x() * s + off.y() * c};
  const Eigen::Vector2d dtheta = corner_theta_derivative(off, state.theta);

  CornerKinematics out;
  out.position = Eigen::Vector2d{state.px, state.py} + world_off;
  out.velocity = Eigen::Vector2d{state.vx, state.vy} + dtheta * state.omega;
  // Second derivative: centripetal term is -R(theta)*offset * omega^2.
  out.acceleration = Eigen::Vector2d{pose_accel.x(), pose_accel.y()} +
                     dtheta * pose_accel.z() - world_off * state.omega * state.omega;
  return out;
}

CordState cord_geometry(const Pose& pose, const RigConfig& rig, int cord) {
  const Eigen::Vector2d anchor = anchor_position(rig, cord);
  const Eigen::Vector2d corner = corner_position(pose, rig, cord);
  const Eigen::Vector2d d = anchor - corner;
  const double length = d.norm();
  if (length < kDegenerateLength) {
    std::ostringstream msg;
    msg << "cord " << cord + 1 << " degenerate: corner coincides with anchor at pose ("
        << pose.px << ", " << pose.py << ", " << pose.theta << ")";
    throw NumericError(msg.str());
  }
  CordState out;
  out.length = length;
  out.angle = std::atan2(kSignY[cord] * d.y(), kSignX[cord] * d.x());
  return out;
}

CordRates cord_rates(const PlatformState& state, const Eigen::Vector3d& pose_accel,
                     const RigConfig& rig, int cord) {
  const Eigen::Vector2d anchor = anchor_position(rig, cord);
  const CornerKinematics ck = corner_kinematics(state, pose_accel, rig, cord);
  const Eigen::Vector2d d = ck.position - anchor;
  const double length = d.norm();
  if (length < kDegenerateLength) {
    throw NumericError("cord " + std::to_string(cord + 1) + " rate singular: near-zero length");
  }
  CordRates out;
  out.rate = d.dot(ck.velocity) / length;
  out.accel = (ck.velocity.squaredNorm() + d.dot(ck.acceleration) - out.rate * out.rate) / length;
  return out;
}

PulleyRates pulley_map(double cord_rate, double cord_accel, const RigConfig& rig) {
  return {-cord_rate / rig.pulley_radius, -cord_accel / rig.pulley_radius};
}

CordLengths inverse_kinematics(const Pose& pose, const RigConfig& rig) {
  if (!pose_in_workspace(pose, rig)) {
    std::ostringstream msg;
    msg << "pose (" << pose.px << ", " << pose.py << ", " << pose.theta
        << ") outside the workspace";
    throw ValidationError(msg.str());
  }
  CordLengths lengths;
  for (int i = 0; i < kNumCords; ++i) {
    lengths[i] = cord_geometry(pose, rig, i).length;
  }
  return lengths;
}

CordJacobian cord_jacobian(const Pose& pose, const RigConfig& rig) {
  CordJacobian jac;
  for (int i = 0; i < kNumCords; ++i) {
    const Eigen::Vector2d anchor = anchor_position(rig, i);
    const Eigen::Vector2d corner = corner_position(pose, rig, i);
    const Eigen::Vector2d d = corner - anchor;
    const double length = d.norm();
    if (length < kDegenerateLength) {
      throw NumericError("jacobian singular: cord " + std::to_string(i + 1) + " has zero length");
    }
    const Eigen::Vector2d unit = d / length;
    const Eigen::Vector2d dtheta = corner_theta_derivative(corner_offset(rig, i), pose.theta);
    jac(i, 0) = unit.x();
    jac(i, 1) = unit.y();
    jac(i, 2) = unit.dot(dtheta);
  }
  return jac;
}

Pose forward_kinematics(const Eigen::Vector3d& lengths, const std::array<int, 3>& cords,
                        const RigConfig& rig, const Pose& guess) {
  constexpr int kMaxIterations = 50;
  constexpr double kResidualTol = 1e-12;
  constexpr double kStepTol = 1e-10;
  constexpr double kMaxCondition = 1e8;
  // Per-iteration step caps keep the iterate in the guess's assembly branch;
  // near parallel singularities alternate roots can sit millimeters apart.
  constexpr double kMaxStepXY = 0.02;
  constexpr double kMaxStepTheta = 0.1;

  auto residual = [&](const Pose& p) {
    Eigen::Vector3d r;
    for (int k = 0; k < 3; ++k) {
      r[k] = cord_geometry(p, rig, cords[k]).length - lengths[k];
    }
    return r;
  };

  Pose pose = guess;
  Eigen::Vector3d r = residual(pose);
  double last_step = std::numeric_limits<double>::infinity();
  for (int iter = 0; iter < kMaxIterations; ++iter) {
    // Converge on both the length residual and the pose increment; the
    // residual alone under-resolves the pose when the triple is poorly
    // conditioned.
    if (r.norm() < kResidualTol && last_step < kStepTol) {
      return pose;
    }
    const CordJacobian full = cord_jacobian(pose, rig);
    Eigen::Matrix3d jac;
    for (int k = 0; k < 3; ++k) {
      jac.row(k) = full.row(cords[k]);
    }
    const Eigen::JacobiSVD<Eigen::Matrix3d> svd(jac, Eigen::ComputeFullU | Eigen::ComputeFullV);
    const double smin = svd.singularValues().minCoeff();
    if (smin <= 0.0 || svd.singularValues().maxCoeff() / smin > kMaxCondition) {
      throw NumericError("forward kinematics: near-singular configuration (condition number > 1e8)");
    }
    Eigen::Vector3d step = svd.solve(-r);
    const double xy_norm = std::hypot(step.x(), step.y());
    if (xy_norm > kMaxStepXY) {
      step *= kMaxStepXY / xy_norm;
    }
    if (std::abs(step.z()) > kMaxStepTheta) {
      step *= kMaxStepTheta / std::abs(step.z());
    }

    // Damped Newton: halve the step while the residual grows.
    double scale = 1.0;
    Pose next;
    Eigen::Vector3d r_next;
    while (true) {
      next = {pose.px + scale * step.x(), pose.py + scale * step.y(),
              pose.theta + scale * step.z()};
      r_next = residual(next);
      if (r_next.norm() <= r.norm() || scale < 1e-4) {
        break;
      }
      scale *= 0.5;
    }
    last_step = scale * step.norm();
    pose = next;
    r = r_next;
  }
  if (r.norm() < kResidualTol && last_step < kStepTol) {
    return pose;
  }
  std::ostringstream msg;
  msg << "forward kinematics did not converge after " << kMaxIterations
      << " iterations (residual " << r.norm() << " m); lengths may be inconsistent";
  throw NumericError(msg.str());
}

bool pose_in_workspace(const Pose& pose, const RigConfig& rig) {
  for (int i = 0; i < kNumCords; ++i) {
    const Eigen::Vector2d c = corner_position(pose, rig, i);
    if (c.x() <= kWorkspaceMargin || c.x() >= rig.stand_width - kWorkspaceMargin ||
        c.y() <= kWorkspaceMargin || c.y() >= rig.stand_height - kWorkspaceMargin) {
      return false;
    }
  }
  return true;
}

}  // namespace scaffold
