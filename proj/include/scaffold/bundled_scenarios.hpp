#pragma once

#include <string>
#include <utility>
#include <vector>

#include "scaffold/rig.hpp"

namespace scaffold {

// The three reference scenarios shipped with the simulator, keyed by the
// file stem used by `scenarios emit-paper`:
//   sim_3_2  diagonal translation (10,10) -> (30,60) cm, level
//   test_1   level motion (50,10) -> (10,60) cm at 0.008 m/s^2
//   test_2   translation (10,30) -> (50,30) cm with a 0 -> 45 deg tilt
// All carry the simulation gains (2000, 500) plus the experimentally tuned
// PWM-scale gains (0.9, 0.01) as metadata.
std::vector<std::pair<std::string, Scenario>> bundled_scenarios();

}  // namespace scaffold
