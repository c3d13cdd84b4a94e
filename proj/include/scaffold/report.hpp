#pragma once

#include <array>
#include <ostream>
#include <string>
#include <vector>

#include "scaffold/sim.hpp"

namespace scaffold {

// RMS and peak tracking errors per channel plus the power envelope of a run.
struct RmsReport {
  std::array<double, kNumCords> cord_rms{};  // m
  std::array<double, kNumCords> cord_max{};  // m
  double x_rms = 0.0, x_max = 0.0;           // m
  double y_rms = 0.0, y_max = 0.0;           // m
  double theta_rms = 0.0, theta_max = 0.0;   // rad
  double peak_power = 0.0;                   // W
  double mean_power = 0.0;                   // W
};

// Throws ValidationError on empty input.
RmsReport compute_rms(const std::vector<TelemetryRecord>& records);

void print_report(const RmsReport& report, std::ostream& out);

std::string report_to_json(const RmsReport& report);

}  // namespace scaffold
