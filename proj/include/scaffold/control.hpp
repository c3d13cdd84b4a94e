#pragma once

#include <array>
#include <limits>

#include "scaffold/rig.hpp"

namespace scaffold {

// Discrete PI controller state for one cord. The error signal is a cable
// length error in meters; positive output is winding torque (shortens the
// cord, matching the winch sign convention).
struct PIState {
  double kp = 0.0;        // N m / m
  double ki = 0.0;        // N m / (m s)
  double integral = 0.0;  // m s, rectangle-rule accumulator
  double last_error = 0.0;  // m
  double windup_limit = std::numeric_limits<double>::infinity();  // m s
};

// Default windup limit caps the integral contribution at the torque limit.
PIState make_pi_state(double kp, double ki, const RigConfig& rig);

// Raw controller output for the current state: kp*error + ki*integral,
// saturated to +/- torque_limit. Does not advance the accumulator.
double pi_output(const PIState& state, double error, const RigConfig& rig);

struct PIOutput {
  double torque = 0.0;  // N m, post-saturation
  PIState state;
};

// One control step: emits the saturated output and integrates the error by
// the rectangle rule. The accumulator is frozen on steps where the raw
// output saturates with the same sign as the error (conditional anti-windup)
// and is always clamped to +/- windup_limit.
PIOutput pi_step(const PIState& state, double error, double dt, const RigConfig& rig);

struct BankOutput {
  std::array<double, kNumCords> torques{};
  std::array<PIState, kNumCords> states;
};

// Four independent PI loops, one per cord; no cross-coupling.
BankOutput controller_bank(const std::array<double, kNumCords>& errors,
                           const std::array<PIState, kNumCords>& states, double dt,
                           const RigConfig& rig);

}  // namespace scaffold
