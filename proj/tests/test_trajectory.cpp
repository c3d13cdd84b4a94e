#include <cmath>
#include <random>

#include "doctest.h"
#include "scaffold/trajectory.hpp"

using namespace scaffold;

namespace {

const RigConfig kRig;
constexpr double kDiagonalDistance = 0.5385164807134504;  // hypot(0.2, 0.5)

Scenario diagonal_scenario() {
  Scenario sc;
  sc.start_pose = {0.10, 0.10, 0.0};
  sc.end_pose = {0.30, 0.60, 0.0};
  return sc;
}

// Speed integral by trapezoid quadrature with nodes aligned to the phase
// breakpoints; exact for a piecewise-linear speed profile.
double integrate_speed(const TrapezoidalProfile& p) {
  auto segment = [&](double t0, double t1) {
    const int n = 64;
    double sum = 0.0;
    const double h = (t1 - t0) / n;
    for (int i = 0; i < n; ++i) {
      sum += 0.5 * (p.speed(t0 + i * h) + p.speed(t0 + (i + 1) * h)) * h;
    }
    return sum;
  };
  const double t1 = p.t_accel;
  const double t2 = p.t_accel + p.t_cruise;
  return segment(0.0, t1) + segment(t1, t2) + segment(t2, p.total_time);
}

}  // namespace

TEST_CASE("profile planning") {
  SUBCASE("diagonal-run trapezoid") {
    const TrapezoidalProfile p = plan_profile(kDiagonalDistance, 0.05, 0.1);
    CHECK_FALSE(p.triangular);
    CHECK(p.t_accel == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(p.t_cruise == doctest::Approx(10.270329614269008).epsilon(1e-12));
    CHECK(p.total_time == doctest::Approx(11.270329614269008).epsilon(1e-12));
    CHECK(p.peak_speed() == doctest::Approx(0.05).epsilon(1e-12));
  }
  SUBCASE("zero distance yields a zero-duration profile") {
    const TrapezoidalProfile p = plan_profile(0.0, 0.05, 0.1);
    CHECK(p.total_time == 0.0);
    CHECK(p.distance(0.0) == 0.0);
  }
  SUBCASE("short path degenerates to a triangle") {
    const TrapezoidalProfile p = plan_profile(0.01, 0.05, 0.1);
    CHECK(p.triangular);
    CHECK(p.t_cruise == 0.0);
    CHECK(p.peak_speed() == doctest::Approx(0.03162277660168379).epsilon(1e-12));
    CHECK(p.peak_speed() <= 0.05);
  }
  SUBCASE("boundary distance still reaches cruise speed") {
    const TrapezoidalProfile p = plan_profile(0.05 * 0.05 / 0.1, 0.05, 0.1);
    CHECK_FALSE(p.triangular);
    CHECK(p.t_cruise == doctest::Approx(0.0));
  }
  SUBCASE("invalid arguments") {
    CHECK_THROWS_AS(plan_profile(-0.1, 0.05, 0.1), ValidationError);
    CHECK_THROWS_AS(plan_profile(0.1, 0.0, 0.1), ValidationError);
    CHECK_THROWS_AS(plan_profile(0.1, 0.05, 0.0), ValidationError);
  }
  SUBCASE("speed integral equals path length on random profiles") {
    std::mt19937 gen(29);
    std::uniform_real_distribution<double> dist(0.0005, 1.0), vel(0.005, 0.2), acc(0.01, 0.5);
    int triangular_seen = 0;
    for (int n = 0; n < 100; ++n) {
      const double d = dist(gen);
      const TrapezoidalProfile p = plan_profile(d, vel(gen), acc(gen));
      triangular_seen += p.triangular ? 1 : 0;
      CHECK(std::abs(integrate_speed(p) - d) < 1e-9 * d);
      CHECK(std::abs(p.distance(p.total_time) - d) < 1e-12 * std::max(1.0, d));
      CHECK(p.speed(0.0) == 0.0);
      CHECK(p.speed(p.total_time) == 0.0);
      CHECK(p.peak_speed() <= p.cruise_speed + 1e-12);
    }
    CHECK(triangular_seen > 0);  // both branches exercised
  }
}

TEST_CASE("pose interpolation") {
  const Scenario sc = diagonal_scenario();
  const TrapezoidalProfile p = plan_profile(kDiagonalDistance, 0.05, 0.1);

  SUBCASE("endpoints") {
    const PoseReference at0 = pose_at(p, sc.start_pose, sc.end_pose, 0.0);
    CHECK(at0.pose.px == doctest::Approx(0.10).epsilon(1e-12));
    CHECK(at0.pose.py == doctest::Approx(0.10).epsilon(1e-12));
    CHECK(at0.rates.norm() == doctest::Approx(0.0));
    const PoseReference at_end = pose_at(p, sc.start_pose, sc.end_pose, p.total_time);
    CHECK(at_end.pose.px == doctest::Approx(0.30).epsilon(1e-12));
    CHECK(at_end.pose.py == doctest::Approx(0.60).epsilon(1e-12));
    CHECK(at_end.rates.norm() == doctest::Approx(0.0));
  }
  SUBCASE("symmetric midpoint") {
    const PoseReference mid = pose_at(p, sc.start_pose, sc.end_pose, p.total_time / 2.0);
    CHECK(mid.pose.px == doctest::Approx(0.20).epsilon(1e-12));
    CHECK(mid.pose.py == doctest::Approx(0.35).epsilon(1e-12));
    CHECK(mid.pose.theta == doctest::Approx(0.0));
  }
  SUBCASE("monotone non-decreasing path fraction") {
    double last = -1.0;
    for (int k = 0; k <= 500; ++k) {
      const double t = p.total_time * k / 500.0;
      const double f = p.fraction(t);
      CHECK(f >= last);
      last = f;
    }
    CHECK(last == doctest::Approx(1.0).epsilon(1e-12));
  }
  SUBCASE("theta follows the same normalized profile") {
    const Pose start{0.10, 0.30, 0.0};
    const Pose end{0.50, 0.30, M_PI / 4.0};
    const TrapezoidalProfile tilt = plan_profile(0.4, 0.05, 0.1);
    const PoseReference mid = pose_at(tilt, start, end, tilt.total_time / 2.0);
    CHECK(mid.pose.theta == doctest::Approx(M_PI / 8.0).epsilon(1e-12));
    // rate proportional to the translational speed through the shared profile
    CHECK(mid.rates.z() ==
          doctest::Approx(tilt.speed(tilt.total_time / 2.0) / 0.4 * (M_PI / 4.0)).epsilon(1e-12));
  }
  SUBCASE("level motion keeps a zero angular reference") {
    for (double t : {0.0, 2.0, 6.0, 11.0}) {
      const PoseReference ref = pose_at(p, sc.start_pose, sc.end_pose, t);
      CHECK(ref.pose.theta == 0.0);
      CHECK(ref.rates.z() == 0.0);
    }
  }
  SUBCASE("out of range time is an error") {
    CHECK_THROWS_AS(pose_at(p, sc.start_pose, sc.end_pose, -0.5), ValidationError);
    CHECK_THROWS_AS(pose_at(p, sc.start_pose, sc.end_pose, p.total_time + 0.5), ValidationError);
  }
}

TEST_CASE("pure rotation distance surrogate") {
  const Pose start{0.30, 0.35, 0.0};
  const Pose end{0.30, 0.35, 0.5};
  const double half_diag = 0.5 * std::hypot(kRig.platform_height, kRig.platform_width);
  CHECK(profile_distance(start, end, kRig) == doctest::Approx(0.5 * half_diag).epsilon(1e-12));
  CHECK(profile_distance(start, start, kRig) == doctest::Approx(0.0));
  // translation dominates when present
  CHECK(profile_distance({0.1, 0.1, 0.0}, {0.3, 0.6, 1.0}, kRig) ==
        doctest::Approx(kDiagonalDistance).epsilon(1e-12));
}

TEST_CASE("reference series") {
  Scenario sc = diagonal_scenario();

  SUBCASE("endpoint lengths equal the inverse kinematics") {
    const ReferenceSeries series = reference_series(sc);
    REQUIRE(!series.time.empty());
    CHECK(series.time.front() == 0.0);
    CHECK(series.time.back() == doctest::Approx(11.270329614269008).epsilon(1e-12));
    CHECK(series.lengths.front()[0] == doctest::Approx(0.5863761591).epsilon(1e-9));
    CHECK(series.lengths.back()[0] == doctest::Approx(0.2371434165).epsilon(1e-9));
    const CordLengths ik_start = inverse_kinematics(sc.start_pose, sc.rig);
    const CordLengths ik_end = inverse_kinematics(sc.end_pose, sc.rig);
    for (int i = 0; i < kNumCords; ++i) {
      CHECK(series.lengths.front()[i] == doctest::Approx(ik_start[i]).epsilon(1e-14));
      CHECK(series.lengths.back()[i] == doctest::Approx(ik_end[i]).epsilon(1e-14));
    }
  }
  SUBCASE("reference continuity and rate consistency") {
    const ReferenceSeries series = reference_series(sc);
    double max_rate = 0.0;
    for (const CordLengths& r : series.rates) {
      max_rate = std::max(max_rate, r.cwiseAbs().maxCoeff());
    }
    for (size_t k = 0; k + 1 < series.time.size(); ++k) {
      const double dt = series.time[k + 1] - series.time[k];
      CHECK(dt > 0.0);
      for (int i = 0; i < kNumCords; ++i) {
        const double step = std::abs(series.lengths[k + 1][i] - series.lengths[k][i]);
        CHECK(step <= max_rate * dt + 1e-9);
        // trapezoid-rule consistency between rates and length differences
        const double predicted =
            0.5 * (series.rates[k][i] + series.rates[k + 1][i]) * dt;
        CHECK(std::abs((series.lengths[k + 1][i] - series.lengths[k][i]) - predicted) < 1e-6);
      }
    }
  }
  SUBCASE("cord 1 reference speed decays during the cruise") {
    const ReferenceSeries series = reference_series(sc);
    // sample |dL1/dt| at the start, middle, and end of the cruise phase
    auto rate_at = [&](double t) {
      size_t best = 0;
      for (size_t k = 0; k < series.time.size(); ++k) {
        if (std::abs(series.time[k] - t) < std::abs(series.time[best] - t)) best = k;
      }
      return std::abs(series.rates[best][0]);
    };
    const double early = rate_at(1.0);
    const double mid = rate_at(5.5);
    const double late = rate_at(10.5);
    CHECK(early > mid);
    CHECK(mid > late);
  }
  SUBCASE("constant series for a zero-motion scenario") {
    sc.end_pose = sc.start_pose;
    const ReferenceSeries series = reference_series(sc);
    REQUIRE(series.time.size() == 1);  // zero-duration profile
    CHECK(series.rates.front().norm() == doctest::Approx(0.0));
  }
  SUBCASE("mid-path workspace violation reports the offending time") {
    // both endpoints are valid, but the swept corner dips below the margin
    // partway through the rotation
    sc.start_pose = {0.30, 0.0845, 0.0};
    sc.end_pose = {0.30, 0.0845, M_PI / 2.0};
    CHECK_THROWS_WITH_AS(reference_series(sc), doctest::Contains("leaves the workspace"),
                         ValidationError);
  }
}
