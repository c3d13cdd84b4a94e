#include "scaffold/control.hpp"

#include <algorithm>
#include <cmath>

namespace scaffold {

namespace {

double sgn(double x) { return (x > 0.0) ? 1.0 : (x < 0.0) ? -1.0 : 0.0; }

}  // namespace

PIState make_pi_state(double kp, double ki, const RigConfig& rig) {
  PIState s;
  s.kp = kp;
  s.ki = ki;
  if (ki > 0.0) {
    s.windup_limit = rig.torque_limit / ki;
  }
  return s;
}

double pi_output(const PIState& state, double error, const RigConfig& rig) {
  const double raw = state.kp * error + state.ki * state.integral;
  return std::clamp(raw, -rig.torque_limit, rig.torque_limit);
}

PIOutput pi_step(const PIState& state, double error, double dt, const RigConfig& rig) {
  if (!(dt > 0.0)) {
    throw ValidationError("pi_step: dt must be positive");
  }
  const double raw = state.kp * error + state.ki * state.integral;
  const double out = std::clamp(raw, -rig.torque_limit, rig.torque_limit);
  const bool saturated = raw != out;

  PIOutput result;
  result.torque = out;
  result.state = state;
  result.state.last_error = error;
  if (!saturated || sgn(error) != sgn(raw)) {
    const double integral = state.integral + error * dt;
    result.state.integral = std::clamp(integral, -state.windup_limit, state.windup_limit);
  }
  return result;
}

BankOutput controller_bank(const std::array<double, kNumCords>& errors,
                           const std::array<PIState, kNumCords>& states, double dt,
                           const RigConfig& rig) {
  BankOutput out;
  for (int i = 0; i < kNumCords; ++i) {
    const PIOutput step = pi_step(states[i], errors[i], dt, rig);
    out.torques[i] = step.torque;
    out.states[i] = step.state;
  }
  return out;
}

}  // namespace scaffold
