#include "scaffold/bundled_scenarios.hpp"

#include <numbers>

namespace scaffold {

std::vector<std::pair<std::string, Scenario>> bundled_scenarios() {
  std::vector<std::pair<std::string, Scenario>> out;

  Scenario sim;
  sim.start_pose = {0.10, 0.10, 0.0};
  sim.end_pose = {0.30, 0.60, 0.0};
  sim.kp_experimental = 0.9;
  sim.ki_experimental = 0.01;
  sim.output_path = "sim_3_2.csv";
  out.emplace_back("sim_3_2", sim);

  Scenario test1;
  test1.start_pose = {0.50, 0.10, 0.0};
  test1.end_pose = {0.10, 0.60, 0.0};
  test1.accel = 0.008;  // the level-motion test ran at 0.8 cm/s^2
  test1.kp_experimental = 0.9;
  test1.ki_experimental = 0.01;
  test1.output_path = "test_1.csv";
  out.emplace_back("test_1", test1);

  Scenario test2;
  test2.start_pose = {0.10, 0.30, 0.0};
  test2.end_pose = {0.50, 0.30, std::numbers::pi / 4.0};
  test2.kp_experimental = 0.9;
  test2.ki_experimental = 0.01;
  test2.output_path = "test_2.csv";
  out.emplace_back("test_2", test2);

  return out;
}

}  // namespace scaffold
