#include "scaffold/report.hpp"

#include <cmath>
#include <iomanip>

#include "json.hpp"

namespace scaffold {

namespace {

struct Accumulator {
  double sum_sq = 0.0;
  double peak = 0.0;

  void add(double error) {
    sum_sq += error * error;
    peak = std::max(peak, std::abs(error));
  }
  double rms(size_t n) const { return std::sqrt(sum_sq / static_cast<double>(n)); }
};

}  // namespace

RmsReport compute_rms(const std::vector<TelemetryRecord>& records) {
  if (records.empty()) {
    throw ValidationError("compute_rms: empty telemetry");
  }
  std::array<Accumulator, kNumCords> cords;
  Accumulator x, y, theta;
  double power_sum = 0.0;
  double power_peak = 0.0;
  for (const TelemetryRecord& r : records) {
    for (int i = 0; i < kNumCords; ++i) {
      cords[i].add(r.length[i] - r.length_ref[i]);
    }
    x.add(r.px - r.px_ref);
    y.add(r.py - r.py_ref);
    theta.add(r.th - r.th_ref);
    power_sum += r.power;
    power_peak = std::max(power_peak, r.power);
  }
  const size_t n = records.size();
  RmsReport report;
  for (int i = 0; i < kNumCords; ++i) {
    report.cord_rms[i] = cords[i].rms(n);
    report.cord_max[i] = cords[i].peak;
  }
  report.x_rms = x.rms(n);
  report.x_max = x.peak;
  report.y_rms = y.rms(n);
  report.y_max = y.peak;
  report.theta_rms = theta.rms(n);
  report.theta_max = theta.peak;
  report.peak_power = power_peak;
  report.mean_power = power_sum / static_cast<double>(n);
  return report;
}

void print_report(const RmsReport& report, std::ostream& out) {
  const auto flags = out.flags();
  out << std::scientific << std::setprecision(3);
  out << "channel                      rms          max\n";
  for (int i = 0; i < kNumCords; ++i) {
    out << "|L" << i + 1 << " - L" << i + 1 << "_ref|  (m)      " << report.cord_rms[i] << "    "
        << report.cord_max[i] << "\n";
  }
  out << "|Px - Px_ref|  (m)      " << report.x_rms << "    " << report.x_max << "\n";
  out << "|Py - Py_ref|  (m)      " << report.y_rms << "    " << report.y_max << "\n";
  out << "|th - th_ref|  (rad)    " << report.theta_rms << "    " << report.theta_max << "\n";
  out << "power (W)               peak " << report.peak_power << ", mean " << report.mean_power
      << "\n";
  out.flags(flags);
}

std::string report_to_json(const RmsReport& report) {
  nlohmann::json j;
  j["cord_rms_m"] = report.cord_rms;
  j["cord_max_m"] = report.cord_max;
  j["x_rms_m"] = report.x_rms;
  j["x_max_m"] = report.x_max;
  j["y_rms_m"] = report.y_rms;
  j["y_max_m"] = report.y_max;
  j["theta_rms_rad"] = report.theta_rms;
  j["theta_max_rad"] = report.theta_max;
  j["peak_power_w"] = report.peak_power;
  j["mean_power_w"] = report.mean_power;
  return j.dump(2);
}

}  // namespace scaffold
