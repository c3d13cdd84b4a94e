// Command-line front end: run scenarios, analyze telemetry, emit plot data,
// and validate the model invariants.
//
//   scaffold_sim simulate <scenario.json>... [--out log.csv] [--gains MODE]
//   scaffold_sim analyze <log.csv> [--json]
//   scaffold_sim plot <log.csv> --channel <name> --out <file>
//   scaffold_sim validate
//   scaffold_sim scenarios emit-paper [--dir DIR]
//
// Exit codes: 0 success, 1 validation/physics failure, 2 usage/file errors.

#include <cmath>
#include <filesystem>
#include <future>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "scaffold/bundled_scenarios.hpp"
#include "scaffold/report.hpp"
#include "scaffold/scenario_io.hpp"
#include "scaffold/sim.hpp"
#include "scaffold/telemetry_io.hpp"

namespace {

using namespace scaffold;

Scenario prepare_scenario(const std::string& path, const std::string& gains) {
  Scenario sc = load_scenario(path);
  if (gains == "experimental") {
    if (!sc.kp_experimental || !sc.ki_experimental) {
      throw ValidationError(path + ": scenario carries no experimental gains");
    }
    sc.kp = *sc.kp_experimental;
    sc.ki = *sc.ki_experimental;
    sc.validate();
  }
  return sc;
}

int run_one(const std::string& path, const std::string& out_override,
            const std::string& gains) {
  const Scenario sc = prepare_scenario(path, gains);
  const std::string out_path = out_override.empty() ? sc.output_path : out_override;
  try {
    const std::vector<TelemetryRecord> records = run(sc);
    write_telemetry_csv(records, out_path);
    std::cout << path << ": wrote " << records.size() << " records to " << out_path << "\n";
    return 0;
  } catch (const SimulationAbort& e) {
    std::cerr << path << ": " << e.what() << "\n";
    if (!e.tail.empty()) {
      const std::string diag = out_path + ".diag";
      write_telemetry_csv(e.tail, diag);
      std::cerr << "last " << e.tail.size() << " records written to " << diag << "\n";
    }
    return 1;
  }
}

int cmd_simulate(const std::vector<std::string>& paths, const std::string& out_override,
                 const std::string& gains) {
  if (paths.size() == 1) {
    return run_one(paths[0], out_override, gains);
  }
  if (!out_override.empty()) {
    throw ValidationError("--out is only valid with a single scenario");
  }
  // Sweep: one deterministic run per scenario, fanned out across threads.
  std::vector<std::future<int>> results;
  results.reserve(paths.size());
  for (const std::string& path : paths) {
    results.push_back(std::async(std::launch::async,
                                 [&gains, path] { return run_one(path, "", gains); }));
  }
  int rc = 0;
  for (auto& f : results) {
    rc = std::max(rc, f.get());
  }
  return rc;
}

int cmd_analyze(const std::string& path, bool as_json) {
  const std::vector<TelemetryRecord> records = read_telemetry_csv(path);
  const RmsReport report = compute_rms(records);
  if (as_json) {
    std::cout << report_to_json(report) << "\n";
  } else {
    print_report(report, std::cout);
  }
  return 0;
}

int cmd_plot(const std::string& path, const std::string& channel, const std::string& out) {
  const std::vector<TelemetryRecord> records = read_telemetry_csv(path);
  write_plot_channel(records, channel, out);
  std::cout << "wrote " << records.size() << " rows to " << out << "\n";
  return 0;
}

bool check(const char* label, bool ok) {
  std::cout << (ok ? "ok:   " : "FAIL: ") << label << "\n";
  return ok;
}

// Quick invariant suite over the shipped configuration.
int cmd_validate() {
  const RigConfig rig;
  bool all = true;

  const int dof = validate_mobility(rig);
  std::cout << "Grübler DOF: " << dof << "\n";
  all &= check("mobility is zero for the shipped topology", dof == 0);

  bool rig_ok = true;
  try {
    rig.validate();
  } catch (const ValidationError&) {
    rig_ok = false;
  }
  all &= check("default configuration passes validation", rig_ok);

  std::mt19937 gen(7041);
  bool round_trip = true;
  std::uniform_real_distribution<double> ux(0.12, 0.48), uy(0.12, 0.58), uth(-0.4, 0.4);
  for (int n = 0; n < 20; ++n) {
    const Pose p{ux(gen), uy(gen), uth(gen)};
    if (!pose_in_workspace(p, rig)) continue;
    const CordLengths lengths = inverse_kinematics(p, rig);
    const Pose guess{p.px + 0.002, p.py - 0.002, p.theta + 0.01};
    const Pose back = forward_kinematics({lengths[0], lengths[1], lengths[2]}, {0, 1, 2}, rig, guess);
    round_trip &= std::abs(back.px - p.px) < 1e-9 && std::abs(back.py - p.py) < 1e-9 &&
                  std::abs(back.theta - p.theta) < 1e-9;
  }
  all &= check("inverse/forward kinematics round trip within 1e-9", round_trip);

  bool statics_ok = true;
  for (int n = 0; n < 20; ++n) {
    const Pose p{ux(gen), uy(gen), uth(gen)};
    if (!pose_in_workspace(p, rig)) continue;
    try {
      const TensionSolution sol = solve_static_tensions(p, rig, Eigen::Vector3d::Zero());
      const WrenchBalance wb = wrench_of_tensions(p, rig, sol.tensions);
      statics_ok &= sol.tensions.minCoeff() >= 0.0 && wb.net_force.norm() < 1e-9 &&
                    std::abs(wb.net_moment) < 1e-9;
    } catch (const NumericError&) {
      // statically unsupportable poses are allowed to fail; skip
    }
  }
  all &= check("static tensions are non-negative with closed wrench balance", statics_ok);

  bool profile_ok = true;
  for (double d : {0.0, 0.01, 0.5385164807134504}) {
    const TrapezoidalProfile prof = plan_profile(d, 0.05, 0.1);
    profile_ok &= std::abs(prof.distance(prof.total_time) - d) < 1e-9 * std::max(1.0, d);
  }
  all &= check("trapezoidal profiles cover their path length", profile_ok);

  return all ? 0 : 1;
}

int cmd_emit(const std::string& dir) {
  std::filesystem::create_directories(dir.empty() ? "." : dir);
  for (const auto& [stem, sc] : bundled_scenarios()) {
    const std::filesystem::path path = std::filesystem::path(dir.empty() ? "." : dir) / (stem + ".json");
    save_scenario(sc, path.string());
    std::cout << "wrote " << path.string() << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Planar cable-suspended platform simulator"};
  app.require_subcommand(1);

  std::vector<std::string> scenario_paths;
  std::string out_override;
  std::string gains = "simulation";
  CLI::App* simulate = app.add_subcommand("simulate", "run scenarios and write telemetry CSV");
  simulate->add_option("scenario", scenario_paths, "scenario JSON file(s)")->required();
  simulate->add_option("--out", out_override, "output CSV path (single scenario only)");
  simulate->add_option("--gains", gains, "gain set: simulation | experimental")
      ->check(CLI::IsMember({"simulation", "experimental"}));

  std::string analyze_path;
  bool analyze_json = false;
  CLI::App* analyze = app.add_subcommand("analyze", "print RMS/max errors and power for a log");
  analyze->add_option("log", analyze_path, "telemetry CSV")->required();
  analyze->add_flag("--json", analyze_json, "emit the report as JSON");

  std::string plot_path, plot_channel, plot_out;
  CLI::App* plot = app.add_subcommand("plot", "write (time, value) data for one channel");
  plot->add_option("log", plot_path, "telemetry CSV")->required();
  plot->add_option("--channel", plot_channel, "channel name (e.g. L1, T3, err_px, power)")
      ->required();
  plot->add_option("--out", plot_out, "output file")->required();

  CLI::App* validate = app.add_subcommand("validate", "run the built-in invariant checks");

  CLI::App* scenarios = app.add_subcommand("scenarios", "scenario file utilities");
  scenarios->require_subcommand(1);
  std::string emit_dir;
  CLI::App* emit = scenarios->add_subcommand("emit-paper", "write the bundled scenarios as JSON");
  emit->add_option("--dir", emit_dir, "output directory (default: current)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return (e.get_exit_code() == 0) ? 0 : 2;
  }

  try {
    if (*simulate) return cmd_simulate(scenario_paths, out_override, gains);
    if (*analyze) return cmd_analyze(analyze_path, analyze_json);
    if (*plot) return cmd_plot(plot_path, plot_channel, plot_out);
    if (*validate) return cmd_validate();
    if (*emit) return cmd_emit(emit_dir);
  } catch (const ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const NumericError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
