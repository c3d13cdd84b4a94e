#include "scaffold/sim.hpp"

#include <cmath>
#include <sstream>

namespace scaffold {

namespace {

double sgn(double x) { return (x > 0.0) ? 1.0 : (x < 0.0) ? -1.0 : 0.0; }

// Continuous plant state packed for integration:
//   [px py th vx vy om q0..q3 w0..w3]
using PlantVector = Eigen::Matrix<double, 14, 1>;

PlantVector pack(const PlatformState& p, const std::array<MotorState, kNumCords>& motors) {
  PlantVector y;
  y << p.px, p.py, p.theta, p.vx, p.vy, p.omega,
      motors[0].shaft_angle, motors[1].shaft_angle, motors[2].shaft_angle, motors[3].shaft_angle,
      motors[0].shaft_speed, motors[1].shaft_speed, motors[2].shaft_speed, motors[3].shaft_speed;
  return y;
}

PlatformState platform_of(const PlantVector& y) {
  return {y[0], y[1], y[2], y[3], y[4], y[5]};
}

struct CableForces {
  std::array<double, kNumCords> geometric{};  // m
  std::array<double, kNumCords> rate{};       // m/s
  std::array<double, kNumCords> released{};   // m
  Eigen::Vector4d tension = Eigen::Vector4d::Zero();
};

// released_i = released0_i - r * q_i; release rate = -r * w_i.
CableForces compute_cables(const PlantVector& y, const std::array<double, kNumCords>& released0,
                           const RigConfig& rig) {
  const PlatformState p = platform_of(y);
  CableForces cf;
  for (int i = 0; i < kNumCords; ++i) {
    cf.geometric[i] = cord_geometry(p.pose(), rig, i).length;
    cf.rate[i] = cord_rates(p, Eigen::Vector3d::Zero(), rig, i).rate;
    cf.released[i] = released0[i] - rig.pulley_radius * y[6 + i];
    const double release_rate = -rig.pulley_radius * y[10 + i];
    cf.tension[i] = cable_tension(cf.geometric[i], cf.released[i], cf.rate[i], release_rate, rig);
  }
  return cf;
}

PlantVector plant_rhs(const PlantVector& y, const std::array<double, kNumCords>& torques,
                      const std::array<double, kNumCords>& released0, const RigConfig& rig) {
  const PlatformState p = platform_of(y);
  const CableForces cf = compute_cables(y, released0, rig);
  const WrenchBalance wb = wrench_of_tensions(p.pose(), rig, cf.tension);

  PlantVector dy;
  dy[0] = p.vx;
  dy[1] = p.vy;
  dy[2] = p.omega;
  dy[3] = wb.net_force.x() / rig.platform_mass;
  dy[4] = wb.net_force.y() / rig.platform_mass;
  dy[5] = wb.net_moment / rig.platform_inertia;
  for (int i = 0; i < kNumCords; ++i) {
    const double w = y[10 + i];
    dy[6 + i] = w;
    dy[10 + i] = (torques[i] - sgn(w) * rig.dry_friction_torque - rig.viscous_damping * w -
                  cf.tension[i] * rig.pulley_radius) /
                 rig.pulley_inertia;
  }
  return dy;
}

PlantVector rk4_step(const PlantVector& y, double h, const std::array<double, kNumCords>& torques,
                     const std::array<double, kNumCords>& released0, const RigConfig& rig) {
  const PlantVector k1 = plant_rhs(y, torques, released0, rig);
  const PlantVector k2 = plant_rhs(y + 0.5 * h * k1, torques, released0, rig);
  const PlantVector k3 = plant_rhs(y + 0.5 * h * k2, torques, released0, rig);
  const PlantVector k4 = plant_rhs(y + h * k3, torques, released0, rig);
  return y + (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
}

}  // namespace

double cable_tension(double geometric_length, double released_length,
                     double geometric_rate, double release_rate, const RigConfig& rig) {
  if (geometric_length < released_length) {
    return 0.0;  // slack: no force regardless of rates
  }
  const double force = rig.cable_stiffness * (geometric_length - released_length) +
                       rig.cable_damping * (geometric_rate - release_rate);
  return std::max(0.0, force);
}

References references_at(const Scenario& scenario, const TrapezoidalProfile& profile,
                         double t) {
  const double tc = std::clamp(t, 0.0, profile.total_time);
  const PoseReference ref = pose_at(profile, scenario.start_pose, scenario.end_pose, tc);
  References out;
  out.pose = ref.pose;
  out.pose_rates = ref.rates;
  PlatformState state{ref.pose.px, ref.pose.py, ref.pose.theta,
                      ref.rates.x(), ref.rates.y(), ref.rates.z()};
  for (int i = 0; i < kNumCords; ++i) {
    out.lengths[i] = cord_geometry(ref.pose, scenario.rig, i).length;
    out.rates[i] = cord_rates(state, Eigen::Vector3d::Zero(), scenario.rig, i).rate;
  }
  return out;
}

StateDerivative derivatives(const SimState& state, const References& refs,
                            const RigConfig& rig) {
  std::array<double, kNumCords> released0;
  std::array<double, kNumCords> torques;
  for (int i = 0; i < kNumCords; ++i) {
    // Reconstruct the winch offsets so released lengths match the state.
    released0[i] = state.motors[i].released_length + rig.pulley_radius * state.motors[i].shaft_angle;
    // The measured cord length comes from the shaft encoder, i.e. the
    // released length; positive error = too much cable out = wind in.
    const double error = state.motors[i].released_length - refs.lengths[i];
    torques[i] = pi_output(state.controllers[i], error, rig);
  }
  const PlantVector y = pack(state.platform, state.motors);
  const PlantVector dy = plant_rhs(y, torques, released0, rig);

  StateDerivative out;
  out.platform_velocity = {dy[0], dy[1], dy[2]};
  out.platform_acceleration = {dy[3], dy[4], dy[5]};
  for (int i = 0; i < kNumCords; ++i) {
    out.shaft_speed[i] = dy[6 + i];
    out.shaft_acceleration[i] = dy[10 + i];
  }
  return out;
}

std::vector<TelemetryRecord> run(const Scenario& scenario) {
  scenario.validate();
  const RigConfig& rig = scenario.rig;
  const double dt = scenario.time_step;
  const TrapezoidalProfile profile = plan_profile(
      profile_distance(scenario.start_pose, scenario.end_pose, rig),
      scenario.cruise_speed, scenario.accel);
  const double horizon = profile.total_time + scenario.settle_time;

  // Pre-tensioned start: released lengths shorter than the geometric ones by
  // the static stretch, so initial cable tensions equal the static solution.
  const TensionSolution statics = solve_static_tensions(scenario.start_pose, rig,
                                                        Eigen::Vector3d::Zero());
  std::array<double, kNumCords> released0;
  std::array<PIState, kNumCords> controllers;
  for (int i = 0; i < kNumCords; ++i) {
    const double geometric = cord_geometry(scenario.start_pose, rig, i).length;
    released0[i] = geometric - statics.tensions[i] / rig.cable_stiffness;
    controllers[i] = make_pi_state(scenario.kp, scenario.ki, rig);
  }

  PlantVector y = pack(
      PlatformState{scenario.start_pose.px, scenario.start_pose.py, scenario.start_pose.theta,
                    0.0, 0.0, 0.0},
      {MotorState{0.0, 0.0, 0.0, released0[0]}, MotorState{0.0, 0.0, 0.0, released0[1]},
       MotorState{0.0, 0.0, 0.0, released0[2]}, MotorState{0.0, 0.0, 0.0, released0[3]}});

  const long full_steps = static_cast<long>(std::floor(horizon / dt + 1e-9));
  const double tail_step = horizon - static_cast<double>(full_steps) * dt;
  const bool has_tail = tail_step > 1e-9;
  const long total_samples = full_steps + 1 + (has_tail ? 1 : 0);

  std::vector<TelemetryRecord> records;
  records.reserve(total_samples);

  auto emit = [&](double t, const References& refs, const std::array<double, kNumCords>& torques) {
    const CableForces cf = compute_cables(y, released0, rig);
    TelemetryRecord rec;
    rec.t = t;
    rec.px = y[0];
    rec.py = y[1];
    rec.th = y[2];
    rec.px_ref = refs.pose.px;
    rec.py_ref = refs.pose.py;
    rec.th_ref = refs.pose.theta;
    Eigen::Vector4d tau_v, w_v;
    for (int i = 0; i < kNumCords; ++i) {
      rec.length[i] = cf.geometric[i];
      rec.length_ref[i] = refs.lengths[i];
      rec.tension[i] = cf.tension[i];
      rec.torque[i] = torques[i];
      rec.motor_speed[i] = y[10 + i];
      tau_v[i] = torques[i];
      w_v[i] = y[10 + i];
    }
    rec.power = mechanical_power(tau_v, w_v);
    records.push_back(rec);
  };

  auto check_state = [&](double t) {
    if (!y.allFinite()) {
      std::vector<TelemetryRecord> tail(records.end() - std::min<size_t>(records.size(), 100),
                                        records.end());
      std::ostringstream msg;
      msg << "simulation diverged (non-finite state) at t=" << t << " s";
      throw SimulationAbort(msg.str(), std::move(tail));
    }
    constexpr double kEscape = 0.05;  // m beyond the stand
    if (y[0] < -kEscape || y[0] > rig.stand_width + kEscape || y[1] < -kEscape ||
        y[1] > rig.stand_height + kEscape) {
      std::vector<TelemetryRecord> tail(records.end() - std::min<size_t>(records.size(), 100),
                                        records.end());
      std::ostringstream msg;
      msg << "platform left the stand by more than 5 cm at t=" << t << " s (pose " << y[0]
          << ", " << y[1] << ")";
      throw SimulationAbort(msg.str(), std::move(tail));
    }
  };

  // Encoder-based length errors: each motor servos its own released length
  // onto the reference, so the redundant motor synchronizes its cord without
  // carrying load.
  auto control_errors = [&](const References& refs) {
    std::array<double, kNumCords> errors;
    for (int i = 0; i < kNumCords; ++i) {
      errors[i] = (released0[i] - rig.pulley_radius * y[6 + i]) - refs.lengths[i];
    }
    return errors;
  };

  for (long k = 0; k <= full_steps; ++k) {
    const double t = static_cast<double>(k) * dt;
    const double h = (k < full_steps) ? dt : (has_tail ? tail_step : 0.0);
    const References refs = references_at(scenario, profile, t);

    const BankOutput bank = controller_bank(control_errors(refs), controllers, (h > 0.0) ? h : dt, rig);
    controllers = bank.states;

    emit(t, refs, bank.torques);
    if (h > 0.0) {
      y = rk4_step(y, h, bank.torques, released0, rig);
      check_state(t + h);
    }
  }

  if (has_tail) {
    const References refs = references_at(scenario, profile, horizon);
    const BankOutput bank = controller_bank(control_errors(refs), controllers, dt, rig);
    emit(horizon, refs, bank.torques);
  }

  return records;
}

}  // namespace scaffold
