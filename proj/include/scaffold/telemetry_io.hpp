#pragma once

#include <array>
#include <string>
#include <vector>

#include "scaffold/sim.hpp"

namespace scaffold {

// Column order of the telemetry CSV; numbers are written with 9 significant
// digits.
inline constexpr std::array<const char*, 28> kTelemetryColumns = {
    "t",      "px",     "py",     "th",     "px_ref", "py_ref", "th_ref",
    "L1",     "L2",     "L3",     "L4",     "L1_ref", "L2_ref", "L3_ref",
    "L4_ref", "T1",     "T2",     "T3",     "T4",     "tau1",   "tau2",
    "tau3",   "tau4",   "w1",     "w2",     "w3",     "w4",     "power"};

void write_telemetry_csv(const std::vector<TelemetryRecord>& records,
                         const std::string& path);

// Throws ValidationError on a missing file, wrong header, or malformed row.
std::vector<TelemetryRecord> read_telemetry_csv(const std::string& path);

// Channel names accepted by write_plot_channel: any telemetry column except
// "t", plus the derived error channels err_L1..err_L4, err_px, err_py,
// err_th (signal minus its reference).
std::vector<std::string> plot_channel_names();

// Writes two-column (time, value) CSV data for one channel; one data row per
// telemetry record.
void write_plot_channel(const std::vector<TelemetryRecord>& records,
                        const std::string& channel, const std::string& path);

}  // namespace scaffold
