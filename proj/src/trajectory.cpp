#include "scaffold/trajectory.hpp"

#include <cmath>
#include <sstream>

namespace scaffold {

namespace {

// Slop for endpoint comparisons on accumulated time grids.
constexpr double kTimeTol = 1e-9;

}  // namespace

double TrapezoidalProfile::speed(double t) const {
  if (t <= 0.0 || t >= total_time) {
    return 0.0;
  }
  if (t < t_accel) {
    return accel * t;
  }
  if (t <= t_accel + t_cruise) {
    return peak_speed();
  }
  return accel * (total_time - t);
}

double TrapezoidalProfile::distance(double t) const {
  if (t <= 0.0) {
    return 0.0;
  }
  if (t >= total_time) {
    return path_length;
  }
  if (t < t_accel) {
    return 0.5 * accel * t * t;
  }
  const double ramp = 0.5 * accel * t_accel * t_accel;
  if (t <= t_accel + t_cruise) {
    return ramp + peak_speed() * (t - t_accel);
  }
  const double tail = total_time - t;
  return path_length - 0.5 * accel * tail * tail;
}

double TrapezoidalProfile::fraction(double t) const {
  if (path_length <= 0.0) {
    return 1.0;
  }
  return distance(t) / path_length;
}

TrapezoidalProfile plan_profile(double distance, double cruise_speed, double accel) {
  if (distance < 0.0) {
    throw ValidationError("plan_profile: distance must be non-negative");
  }
  if (!(cruise_speed > 0.0) || !(accel > 0.0)) {
    throw ValidationError("plan_profile: cruise speed and acceleration must be positive");
  }
  TrapezoidalProfile p;
  p.path_length = distance;
  p.cruise_speed = cruise_speed;
  p.accel = accel;
  if (distance == 0.0) {
    return p;  // zero-duration profile
  }
  const double ramp_distance = cruise_speed * cruise_speed / accel;  // both ramps combined
  if (distance < ramp_distance) {
    p.triangular = true;
    p.t_accel = std::sqrt(distance / accel);
    p.t_cruise = 0.0;
  } else {
    p.t_accel = cruise_speed / accel;
    p.t_cruise = (distance - ramp_distance) / cruise_speed;
  }
  p.total_time = 2.0 * p.t_accel + p.t_cruise;
  return p;
}

PoseReference pose_at(const TrapezoidalProfile& profile, const Pose& start,
                      const Pose& end, double t) {
  if (t < -kTimeTol || t > profile.total_time + kTimeTol) {
    std::ostringstream msg;
    msg << "pose_at: t=" << t << " outside [0, " << profile.total_time << "]";
    throw ValidationError(msg.str());
  }
  t = std::clamp(t, 0.0, profile.total_time);

  const Eigen::Vector3d delta{end.px - start.px, end.py - start.py, end.theta - start.theta};
  PoseReference out;
  if (profile.path_length <= 0.0) {
    out.pose = (t >= profile.total_time) ? end : start;
    return out;
  }
  const double lambda = profile.fraction(t);
  const double lambda_rate = profile.speed(t) / profile.path_length;
  double accel = 0.0;
  if (t > 0.0 && t < profile.t_accel) {
    accel = profile.accel;
  } else if (t > profile.t_accel + profile.t_cruise && t < profile.total_time) {
    accel = -profile.accel;
  }
  const double lambda_accel = accel / profile.path_length;

  out.pose = {start.px + lambda * delta.x(), start.py + lambda * delta.y(),
              start.theta + lambda * delta.z()};
  out.rates = lambda_rate * delta;
  out.accelerations = lambda_accel * delta;
  return out;
}

double profile_distance(const Pose& start, const Pose& end, const RigConfig& rig) {
  const double translation = std::hypot(end.px - start.px, end.py - start.py);
  if (translation > 1e-12) {
    return translation;
  }
  const double half_diagonal =
      0.5 * std::hypot(rig.platform_height, rig.platform_width);
  return std::abs(end.theta - start.theta) * half_diagonal;
}

ReferenceSeries reference_series(const Scenario& scenario) {
  const TrapezoidalProfile profile = plan_profile(
      profile_distance(scenario.start_pose, scenario.end_pose, scenario.rig),
      scenario.cruise_speed, scenario.accel);

  std::vector<double> grid;
  const long full_steps = static_cast<long>(std::floor(profile.total_time / scenario.time_step + kTimeTol));
  grid.reserve(full_steps + 2);
  for (long k = 0; k <= full_steps; ++k) {
    grid.push_back(static_cast<double>(k) * scenario.time_step);
  }
  if (grid.back() < profile.total_time - kTimeTol) {
    grid.push_back(profile.total_time);  // exact final time
  }

  ReferenceSeries series;
  series.time.reserve(grid.size());
  series.poses.reserve(grid.size());
  series.lengths.reserve(grid.size());
  series.rates.reserve(grid.size());
  for (double t : grid) {
    const PoseReference ref = pose_at(profile, scenario.start_pose, scenario.end_pose, t);
    if (!pose_in_workspace(ref.pose, scenario.rig)) {
      std::ostringstream msg;
      msg << "reference trajectory leaves the workspace at t=" << t << " s (pose "
          << ref.pose.px << ", " << ref.pose.py << ", " << ref.pose.theta << ")";
      throw ValidationError(msg.str());
    }
    PlatformState state{ref.pose.px, ref.pose.py, ref.pose.theta,
                        ref.rates.x(), ref.rates.y(), ref.rates.z()};
    CordLengths lengths;
    CordLengths rates;
    for (int i = 0; i < kNumCords; ++i) {
      lengths[i] = cord_geometry(ref.pose, scenario.rig, i).length;
      rates[i] = cord_rates(state, Eigen::Vector3d::Zero(), scenario.rig, i).rate;
    }
    series.time.push_back(t);
    series.poses.push_back(ref.pose);
    series.lengths.push_back(lengths);
    series.rates.push_back(rates);
  }
  return series;
}

}  // namespace scaffold
