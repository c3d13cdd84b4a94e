#include "scaffold/rig.hpp"

#include <sstream>

#include "scaffold/kinematics.hpp"

namespace scaffold {

namespace {

void require_positive(double value, const char* field) {
  if (!(value > 0.0)) {
    std::ostringstream msg;
    msg << field << ": must be strictly positive, got " << value;
    throw ValidationError(msg.str());
  }
}

}  // namespace

void RigConfig::validate() const {
  require_positive(stand_height, "stand_height_m");
  require_positive(stand_width, "stand_width_m");
  require_positive(platform_height, "platform_height_m");
  require_positive(platform_width, "platform_width_m");
  require_positive(platform_mass, "platform_mass_kg");
  require_positive(platform_inertia, "platform_inertia_kgm2");
  require_positive(pulley_radius, "pulley_radius_m");
  require_positive(pulley_inertia, "pulley_inertia_kgm2");
  require_positive(cable_stiffness, "cable_stiffness_npm");
  require_positive(torque_limit, "torque_limit_nm");
  require_positive(speed_limit, "speed_limit_radps");
  if (viscous_damping < 0.0) {
    throw ValidationError("viscous_damping_nms: must be non-negative");
  }
  if (dry_friction_torque < 0.0) {
    throw ValidationError("dry_friction_torque_nm: must be non-negative");
  }
  if (cable_damping < 0.0) {
    throw ValidationError("cable_damping_nspm: must be non-negative");
  }
  if (!(platform_height < stand_height)) {
    std::ostringstream msg;
    msg << "platform_height_m: platform must fit inside the stand (a=" << platform_height
        << " >= A=" << stand_height << ")";
    throw ValidationError(msg.str());
  }
  if (!(platform_width < stand_width)) {
    std::ostringstream msg;
    msg << "platform_width_m: platform must fit inside the stand (b=" << platform_width
        << " >= B=" << stand_width << ")";
    throw ValidationError(msg.str());
  }
}

void Scenario::validate() const {
  rig.validate();
  if (!pose_in_workspace(start_pose, rig)) {
    throw ValidationError("start_pose_m: pose is outside the workspace");
  }
  if (!pose_in_workspace(end_pose, rig)) {
    throw ValidationError("end_pose_m: pose is outside the workspace");
  }
  require_positive(cruise_speed, "cruise_speed_mps");
  require_positive(accel, "accel_mps2");
  require_positive(time_step, "time_step_s");
  require_positive(settle_time, "settle_time_s");
  require_positive(kp, "kp");
  if (ki < 0.0) {
    throw ValidationError("ki: must be non-negative");
  }
  if (output_path.empty()) {
    throw ValidationError("output_path: must not be empty");
  }
}

int grubler_dof(int links, int pin_joints, int cylindrical_joints) {
  return 3 * links - 2 * pin_joints - cylindrical_joints - 3;
}

int validate_mobility(const RigConfig&) {
  // Platform, three taut cords, ground; a pin joint at each cord end.
  return grubler_dof(5, 6, 0);
}

}  // namespace scaffold
