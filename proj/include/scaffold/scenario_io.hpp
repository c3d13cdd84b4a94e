#pragma once

#include <string>

#include "scaffold/rig.hpp"

namespace scaffold {

// Scenario file schema: UTF-8 JSON with flat keys. All fields are optional
// except one start pose and one end pose. Unknown keys are a validation
// error. Pose keys come in two unit variants, exactly one of which may be
// given per pose:
//   "start_pose_m":  [x_m, y_m, theta_rad]
//   "start_pose_cm": [x_cm, y_cm, theta_deg]
// Everything else is SI, suffix-named (see the rig field list in the README).
Scenario scenario_from_json_text(const std::string& text);
std::string scenario_to_json_text(const Scenario& scenario);

// Loads, parses, and validates. Throws ValidationError naming the offending
// key on parse or validation failure.
Scenario load_scenario(const std::string& path);
void save_scenario(const Scenario& scenario, const std::string& path);

}  // namespace scaffold
