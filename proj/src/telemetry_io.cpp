#include "scaffold/telemetry_io.hpp"

#include <cstdio>
#include <fstream>
#include <functional>
#include <sstream>

namespace scaffold {

namespace {

std::array<double, 28> record_values(const TelemetryRecord& r) {
  std::array<double, 28> v;
  int n = 0;
  v[n++] = r.t;
  v[n++] = r.px;
  v[n++] = r.py;
  v[n++] = r.th;
  v[n++] = r.px_ref;
  v[n++] = r.py_ref;
  v[n++] = r.th_ref;
  for (int i = 0; i < kNumCords; ++i) v[n++] = r.length[i];
  for (int i = 0; i < kNumCords; ++i) v[n++] = r.length_ref[i];
  for (int i = 0; i < kNumCords; ++i) v[n++] = r.tension[i];
  for (int i = 0; i < kNumCords; ++i) v[n++] = r.torque[i];
  for (int i = 0; i < kNumCords; ++i) v[n++] = r.motor_speed[i];
  v[n++] = r.power;
  return v;
}

TelemetryRecord record_from_values(const std::array<double, 28>& v) {
  TelemetryRecord r;
  int n = 0;
  r.t = v[n++];
  r.px = v[n++];
  r.py = v[n++];
  r.th = v[n++];
  r.px_ref = v[n++];
  r.py_ref = v[n++];
  r.th_ref = v[n++];
  for (int i = 0; i < kNumCords; ++i) r.length[i] = v[n++];
  for (int i = 0; i < kNumCords; ++i) r.length_ref[i] = v[n++];
  for (int i = 0; i < kNumCords; ++i) r.tension[i] = v[n++];
  for (int i = 0; i < kNumCords; ++i) r.torque[i] = v[n++];
  for (int i = 0; i < kNumCords; ++i) r.motor_speed[i] = v[n++];
  r.power = v[n++];
  return r;
}

std::string header_line() {
  std::string h;
  for (size_t i = 0; i < kTelemetryColumns.size(); ++i) {
    if (i > 0) h += ',';
    h += kTelemetryColumns[i];
  }
  return h;
}

void append_number(std::string& line, double value) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.9g", value);
  line += buf;
}

}  // namespace

void write_telemetry_csv(const std::vector<TelemetryRecord>& records,
                         const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw ValidationError("cannot open for writing: " + path);
  }
  out << header_line() << '\n';
  std::string line;
  for (const TelemetryRecord& r : records) {
    line.clear();
    const auto values = record_values(r);
    for (size_t i = 0; i < values.size(); ++i) {
      if (i > 0) line += ',';
      append_number(line, values[i]);
    }
    line += '\n';
    out << line;
  }
  if (!out) {
    throw ValidationError("write failed: " + path);
  }
}

std::vector<TelemetryRecord> read_telemetry_csv(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw ValidationError("cannot open telemetry file: " + path);
  }
  std::string line;
  if (!std::getline(in, line)) {
    throw ValidationError("empty telemetry file: " + path);
  }
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != header_line()) {
    throw ValidationError("unexpected telemetry header in " + path + ": " + line);
  }
  std::vector<TelemetryRecord> records;
  size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::array<double, 28> values;
    const char* p = line.c_str();
    for (size_t i = 0; i < values.size(); ++i) {
      char* end = nullptr;
      values[i] = std::strtod(p, &end);
      if (end == p) {
        throw ValidationError("malformed telemetry row " + std::to_string(line_no) + " in " + path);
      }
      p = end;
      if (i + 1 < values.size()) {
        if (*p != ',') {
          throw ValidationError("malformed telemetry row " + std::to_string(line_no) + " in " + path);
        }
        ++p;
      }
    }
    records.push_back(record_from_values(values));
  }
  return records;
}

std::vector<std::string> plot_channel_names() {
  std::vector<std::string> names;
  for (size_t i = 1; i < kTelemetryColumns.size(); ++i) {
    names.emplace_back(kTelemetryColumns[i]);
  }
  for (const char* n : {"err_L1", "err_L2", "err_L3", "err_L4", "err_px", "err_py", "err_th"}) {
    names.emplace_back(n);
  }
  return names;
}

void write_plot_channel(const std::vector<TelemetryRecord>& records,
                        const std::string& channel, const std::string& path) {
  std::function<double(const TelemetryRecord&)> get;
  for (size_t i = 1; i < kTelemetryColumns.size(); ++i) {
    if (channel == kTelemetryColumns[i]) {
      get = [i](const TelemetryRecord& r) { return record_values(r)[i]; };
      break;
    }
  }
  if (!get) {
    if (channel == "err_px") get = [](const TelemetryRecord& r) { return r.px - r.px_ref; };
    else if (channel == "err_py") get = [](const TelemetryRecord& r) { return r.py - r.py_ref; };
    else if (channel == "err_th") get = [](const TelemetryRecord& r) { return r.th - r.th_ref; };
    else if (channel.rfind("err_L", 0) == 0 && channel.size() == 6 &&
             channel[5] >= '1' && channel[5] <= '4') {
      const int idx = channel[5] - '1';
      get = [idx](const TelemetryRecord& r) { return r.length[idx] - r.length_ref[idx]; };
    }
  }
  if (!get) {
    throw ValidationError("unknown plot channel: " + channel);
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw ValidationError("cannot open for writing: " + path);
  }
  out << "t," << channel << '\n';
  std::string line;
  for (const TelemetryRecord& r : records) {
    line.clear();
    append_number(line, r.t);
    line += ',';
    append_number(line, get(r));
    line += '\n';
    out << line;
  }
}

}  // namespace scaffold
