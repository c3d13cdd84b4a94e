#include <cmath>
#include <random>

#include "doctest.h"
#include "scaffold/control.hpp"

using namespace scaffold;

namespace {

const RigConfig kRig;

}  // namespace

TEST_CASE("pi step") {
  SUBCASE("zero error, empty accumulator") {
    const PIState s = make_pi_state(2000.0, 500.0, kRig);
    const PIOutput out = pi_step(s, 0.0, 1e-3, kRig);
    CHECK(out.torque == doctest::Approx(0.0));
    CHECK(out.state.integral == doctest::Approx(0.0));
  }
  SUBCASE("sub-saturation arithmetic") {
    const PIState s = make_pi_state(2000.0, 500.0, kRig);
    const PIOutput out = pi_step(s, 2.56e-4, 1e-3, kRig);
    CHECK(out.torque == doctest::Approx(0.512).epsilon(1e-12));
    CHECK(out.state.integral == doctest::Approx(2.56e-7).epsilon(1e-12));
  }
  SUBCASE("saturation clamps to the torque limit") {
    const PIState s = make_pi_state(2000.0, 500.0, kRig);
    const PIOutput out = pi_step(s, 0.01, 1e-3, kRig);
    CHECK(out.torque == doctest::Approx(2.0));
    // raw output 20 N m saturates with a same-sign error: accumulator frozen
    CHECK(out.state.integral == doctest::Approx(0.0));
  }
  SUBCASE("dt must be positive") {
    const PIState s = make_pi_state(2000.0, 500.0, kRig);
    CHECK_THROWS_AS(pi_step(s, 0.0, 0.0, kRig), ValidationError);
  }
  SUBCASE("windup limit defaults to torque_limit / ki") {
    const PIState s = make_pi_state(2000.0, 500.0, kRig);
    CHECK(s.windup_limit == doctest::Approx(2.0 / 500.0).epsilon(1e-12));
    const PIState p_only = make_pi_state(2000.0, 0.0, kRig);
    CHECK(std::isinf(p_only.windup_limit));
  }
  SUBCASE("linearity below saturation") {
    std::mt19937 gen(43);
    std::uniform_real_distribution<double> err(-2e-4, 2e-4), integ(-1e-4, 1e-4);
    for (int n = 0; n < 200; ++n) {
      PIState a = make_pi_state(2000.0, 500.0, kRig);
      PIState b = make_pi_state(2000.0, 500.0, kRig);
      a.integral = integ(gen);
      b.integral = integ(gen);
      const double ea = err(gen), eb = err(gen);
      const double ua = pi_step(a, ea, 1e-3, kRig).torque;
      const double ub = pi_step(b, eb, 1e-3, kRig).torque;
      PIState sum = make_pi_state(2000.0, 500.0, kRig);
      sum.integral = a.integral + b.integral;
      const double us = pi_step(sum, ea + eb, 1e-3, kRig).torque;
      CHECK(std::abs(us - (ua + ub)) < 1e-12);
    }
  }
  SUBCASE("output never exceeds the limit") {
    std::mt19937 gen(47);
    std::uniform_real_distribution<double> err(-0.5, 0.5);
    PIState s = make_pi_state(2000.0, 500.0, kRig);
    for (int n = 0; n < 1000; ++n) {
      const PIOutput out = pi_step(s, err(gen), 1e-3, kRig);
      s = out.state;
      CHECK(std::abs(out.torque) <= kRig.torque_limit);
      CHECK(std::abs(s.integral) <= s.windup_limit);
    }
  }
  SUBCASE("anti-windup bounds the accumulator and recovers after a sign flip") {
    PIState s = make_pi_state(2000.0, 500.0, kRig);
    const double dt = 1e-3;
    double torque = 0.0;
    for (int n = 0; n < 100000; ++n) {  // 100 s of persistent 0.1 m error
      const PIOutput out = pi_step(s, 0.1, dt, kRig);
      s = out.state;
      torque = out.torque;
    }
    CHECK(std::abs(s.integral) <= s.windup_limit + 1e-15);
    CHECK(torque == doctest::Approx(kRig.torque_limit));
    // flip the error: the command must leave the positive rail immediately
    const double integral_at_flip = s.integral;
    bool recovered = false;
    for (int n = 0; n < 10 && !recovered; ++n) {
      const PIOutput out = pi_step(s, -0.1, dt, kRig);
      s = out.state;
      recovered = out.torque < 0.0;
    }
    CHECK(recovered);
    CHECK(s.integral <= integral_at_flip + 1e-15);  // no further positive growth
  }
}

TEST_CASE("controller bank") {
  const std::array<PIState, kNumCords> states{
      make_pi_state(2000.0, 500.0, kRig), make_pi_state(2000.0, 500.0, kRig),
      make_pi_state(2000.0, 500.0, kRig), make_pi_state(2000.0, 500.0, kRig)};

  SUBCASE("all zero errors command nothing") {
    const BankOutput out = controller_bank({0.0, 0.0, 0.0, 0.0}, states, 1e-3, kRig);
    for (double t : out.torques) {
      CHECK(t == doctest::Approx(0.0));
    }
  }
  SUBCASE("identical errors give identical torques") {
    const BankOutput out = controller_bank({1e-4, 1e-4, 1e-4, 1e-4}, states, 1e-3, kRig);
    CHECK(out.torques[0] == out.torques[1]);
    CHECK(out.torques[1] == out.torques[2]);
    CHECK(out.torques[2] == out.torques[3]);
  }
  SUBCASE("loops are decoupled") {
    const BankOutput out = controller_bank({2e-4, 0.0, 0.0, 0.0}, states, 1e-3, kRig);
    CHECK(out.torques[0] == doctest::Approx(0.4).epsilon(1e-12));
    CHECK(out.torques[1] == 0.0);
    CHECK(out.torques[2] == 0.0);
    CHECK(out.torques[3] == 0.0);
    CHECK(out.states[1].integral == 0.0);
  }
}
