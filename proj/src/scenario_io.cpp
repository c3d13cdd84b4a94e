#include "scaffold/scenario_io.hpp"

#include <fstream>
#include <numbers>
#include <set>
#include <sstream>

#include "json.hpp"

namespace scaffold {

namespace {

using nlohmann::json;

const std::set<std::string> kKnownKeys = {
    "stand_height_m", "stand_width_m", "platform_height_m", "platform_width_m",
    "platform_mass_kg", "platform_inertia_kgm2", "pulley_radius_m", "pulley_inertia_kgm2",
    "viscous_damping_nms", "dry_friction_torque_nm", "gravity_mps2", "cable_stiffness_npm",
    "cable_damping_nspm", "torque_limit_nm", "speed_limit_radps",
    "start_pose_m", "end_pose_m", "start_pose_cm", "end_pose_cm",
    "cruise_speed_mps", "accel_mps2", "kp", "ki", "kp_experimental", "ki_experimental",
    "time_step_s", "settle_time_s", "output_path",
};

double number_at(const json& j, const std::string& key) {
  const json& v = j.at(key);
  if (!v.is_number()) {
    throw ValidationError(key + ": expected a number");
  }
  return v.get<double>();
}

void read_number(const json& j, const std::string& key, double& target) {
  if (j.contains(key)) {
    target = number_at(j, key);
  }
}

Pose pose_from_array(const json& v, const std::string& key, bool centimeters) {
  if (!v.is_array() || v.size() != 3 || !v[0].is_number() || !v[1].is_number() ||
      !v[2].is_number()) {
    throw ValidationError(key + ": expected [x, y, theta] with three numbers");
  }
  Pose p{v[0].get<double>(), v[1].get<double>(), v[2].get<double>()};
  if (centimeters) {
    p.px /= 100.0;
    p.py /= 100.0;
    p.theta *= std::numbers::pi / 180.0;  // cm variant carries degrees
  }
  return p;
}

Pose read_pose(const json& j, const std::string& si_key, const std::string& cm_key) {
  const bool has_si = j.contains(si_key);
  const bool has_cm = j.contains(cm_key);
  if (has_si && has_cm) {
    throw ValidationError(si_key + ": both unit variants given; use exactly one");
  }
  if (!has_si && !has_cm) {
    throw ValidationError(si_key + ": missing (give " + si_key + " or " + cm_key + ")");
  }
  if (has_si) {
    return pose_from_array(j.at(si_key), si_key, false);
  }
  return pose_from_array(j.at(cm_key), cm_key, true);
}

}  // namespace

Scenario scenario_from_json_text(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ValidationError(std::string("scenario parse error: ") + e.what());
  }
  if (!j.is_object()) {
    throw ValidationError("scenario file: top level must be a JSON object");
  }
  for (const auto& item : j.items()) {
    if (!kKnownKeys.count(item.key())) {
      throw ValidationError("unknown scenario key: \"" + item.key() + "\"");
    }
  }

  Scenario sc;
  read_number(j, "stand_height_m", sc.rig.stand_height);
  read_number(j, "stand_width_m", sc.rig.stand_width);
  read_number(j, "platform_height_m", sc.rig.platform_height);
  read_number(j, "platform_width_m", sc.rig.platform_width);
  read_number(j, "platform_mass_kg", sc.rig.platform_mass);
  read_number(j, "platform_inertia_kgm2", sc.rig.platform_inertia);
  read_number(j, "pulley_radius_m", sc.rig.pulley_radius);
  read_number(j, "pulley_inertia_kgm2", sc.rig.pulley_inertia);
  read_number(j, "viscous_damping_nms", sc.rig.viscous_damping);
  read_number(j, "dry_friction_torque_nm", sc.rig.dry_friction_torque);
  read_number(j, "gravity_mps2", sc.rig.gravity);
  read_number(j, "cable_stiffness_npm", sc.rig.cable_stiffness);
  read_number(j, "cable_damping_nspm", sc.rig.cable_damping);
  read_number(j, "torque_limit_nm", sc.rig.torque_limit);
  read_number(j, "speed_limit_radps", sc.rig.speed_limit);

  sc.start_pose = read_pose(j, "start_pose_m", "start_pose_cm");
  sc.end_pose = read_pose(j, "end_pose_m", "end_pose_cm");

  read_number(j, "cruise_speed_mps", sc.cruise_speed);
  read_number(j, "accel_mps2", sc.accel);
  read_number(j, "kp", sc.kp);
  read_number(j, "ki", sc.ki);
  if (j.contains("kp_experimental")) {
    sc.kp_experimental = number_at(j, "kp_experimental");
  }
  if (j.contains("ki_experimental")) {
    sc.ki_experimental = number_at(j, "ki_experimental");
  }
  read_number(j, "time_step_s", sc.time_step);
  read_number(j, "settle_time_s", sc.settle_time);
  if (j.contains("output_path")) {
    const json& v = j.at("output_path");
    if (!v.is_string()) {
      throw ValidationError("output_path: expected a string");
    }
    sc.output_path = v.get<std::string>();
  }

  sc.validate();
  return sc;
}

std::string scenario_to_json_text(const Scenario& sc) {
  json j;
  j["stand_height_m"] = sc.rig.stand_height;
  j["stand_width_m"] = sc.rig.stand_width;
  j["platform_height_m"] = sc.rig.platform_height;
  j["platform_width_m"] = sc.rig.platform_width;
  j["platform_mass_kg"] = sc.rig.platform_mass;
  j["platform_inertia_kgm2"] = sc.rig.platform_inertia;
  j["pulley_radius_m"] = sc.rig.pulley_radius;
  j["pulley_inertia_kgm2"] = sc.rig.pulley_inertia;
  j["viscous_damping_nms"] = sc.rig.viscous_damping;
  j["dry_friction_torque_nm"] = sc.rig.dry_friction_torque;
  j["gravity_mps2"] = sc.rig.gravity;
  j["cable_stiffness_npm"] = sc.rig.cable_stiffness;
  j["cable_damping_nspm"] = sc.rig.cable_damping;
  j["torque_limit_nm"] = sc.rig.torque_limit;
  j["speed_limit_radps"] = sc.rig.speed_limit;
  j["start_pose_m"] = {sc.start_pose.px, sc.start_pose.py, sc.start_pose.theta};
  j["end_pose_m"] = {sc.end_pose.px, sc.end_pose.py, sc.end_pose.theta};
  j["cruise_speed_mps"] = sc.cruise_speed;
  j["accel_mps2"] = sc.accel;
  j["kp"] = sc.kp;
  j["ki"] = sc.ki;
  if (sc.kp_experimental) {
    j["kp_experimental"] = *sc.kp_experimental;
  }
  if (sc.ki_experimental) {
    j["ki_experimental"] = *sc.ki_experimental;
  }
  j["time_step_s"] = sc.time_step;
  j["settle_time_s"] = sc.settle_time;
  j["output_path"] = sc.output_path;
  return j.dump(2);
}

Scenario load_scenario(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw ValidationError("cannot open scenario file: " + path);
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  try {
    return scenario_from_json_text(buffer.str());
  } catch (const ValidationError& e) {
    throw ValidationError(path + ": " + e.what());
  }
}

void save_scenario(const Scenario& scenario, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw ValidationError("cannot open for writing: " + path);
  }
  out << scenario_to_json_text(scenario) << '\n';
  if (!out) {
    throw ValidationError("write failed: " + path);
  }
}

}  // namespace scaffold
