#include <cmath>
#include <string>
#include <vector>

#include <doctest.h>

#include "springlink/oracle.hpp"

using namespace springlink;

namespace {

const LinkageGeometry kGeom{0.15};
const StrokeConfig kStroke = StrokeConfig::make(deg_to_rad(179.9), 0.0);

}  // namespace

TEST_CASE("stored energy of an explicit knee-knee spring") {
  StrokeConfig cfg = StrokeConfig::make(deg_to_rad(164), 0.0);
  SpringInstance s = SpringInstance::translational(
      kGeom, cfg, {LinkId::BA, 1.0}, {LinkId::FD, 1.0}, 200.0);
  CHECK(s.energy(kGeom, deg_to_rad(90)) ==
        doctest::Approx(2.902937986220364).epsilon(1e-13));
  CHECK(s.energy(kGeom, cfg.theta_ini) == doctest::Approx(0.0));
  std::vector<SpringInstance> both = {s, s};
  CHECK(potential_energy(kGeom, both, deg_to_rad(90)) ==
        doctest::Approx(2.0 * 2.902937986220364).epsilon(1e-13));
}

TEST_CASE("coordinate-derived joint angles match the analytic claim") {
  for (double deg : {179.0, 120.0, 90.0, 45.0, 7.0}) {
    const double theta = deg_to_rad(deg);
    StrokeConfig cfg = StrokeConfig::make(deg_to_rad(179.5), 0.0);
    SpringInstance knee = SpringInstance::rotational(kGeom, cfg, JointId::A, 1.0);
    SpringInstance body = SpringInstance::rotational(kGeom, cfg, JointId::B, 1.0);
    SpringInstance foot = SpringInstance::rotational(kGeom, cfg, JointId::F, 1.0);
    CHECK(knee.current_value(kGeom, theta) ==
          doctest::Approx(theta).epsilon(1e-12));
    CHECK(body.current_value(kGeom, theta) ==
          doctest::Approx(kPi - theta).epsilon(1e-12));
    CHECK(foot.current_value(kGeom, theta) ==
          doctest::Approx(kPi - theta).epsilon(1e-12));
  }
}

TEST_CASE("finite-difference force matches pinned closed-form values") {
  const double th = deg_to_rad(90);
  std::vector<SpringInstance> b25 = {SpringInstance::from_spec(
      SpringSpec::model_b(0.25, 200.0), kGeom, kStroke)};
  // Tolerance sits at the finite-difference noise floor, well under the
  // 1e-6 verification bound.
  CHECK(oracle_force(kGeom, kStroke, b25, th) ==
        doctest::Approx(2.9237925927417927).epsilon(1e-8));
  std::vector<SpringInstance> c75 = {SpringInstance::from_spec(
      SpringSpec::model_c(0.75, 200.0), kGeom, kStroke)};
  CHECK(oracle_force(kGeom, kStroke, c75, deg_to_rad(120)) ==
        doctest::Approx(1.0658615023011493).epsilon(1e-8));
}

TEST_CASE("plain central difference converges at second order") {
  SpringSpec spec = SpringSpec::model_a(0.25, 200.0);
  std::vector<SpringInstance> springs = {
      SpringInstance::from_spec(spec, kGeom, kStroke)};
  const double th = deg_to_rad(90);
  const double truth = charging_force(spec, kGeom, kStroke, th);
  const double e1 =
      std::abs(oracle_force_plain(kGeom, kStroke, springs, th, kGeom.d() * 1e-3) -
               truth);
  const double e2 =
      std::abs(oracle_force_plain(kGeom, kStroke, springs, th,
                                  kGeom.d() * 5e-4) -
               truth);
  const double ratio = e1 / e2;
  CHECK(ratio > 3.5);
  CHECK(ratio < 4.5);
}

TEST_CASE("spring translation along its links changes nothing") {
  // Sliding both end points by the same amount in opposite directions keeps
  // the spring vector, so length and force are identical.
  for (double t : {0.05, 0.2}) {
    const double g = 0.35;
    SpringInstance centred = SpringInstance::translational(
        kGeom, kStroke, {LinkId::BA, g}, {LinkId::FD, g}, 200.0);
    SpringInstance slid = SpringInstance::translational(
        kGeom, kStroke, {LinkId::BA, g - t}, {LinkId::FD, g + t}, 200.0);
    CHECK(slid.natural == doctest::Approx(centred.natural).epsilon(1e-14));
    for (double deg : {150.0, 90.0, 30.0}) {
      const double th = deg_to_rad(deg);
      CHECK(slid.current_value(kGeom, th) ==
            doctest::Approx(centred.current_value(kGeom, th)).epsilon(1e-14));
      std::vector<SpringInstance> a = {centred}, b = {slid};
      CHECK(oracle_force(kGeom, kStroke, b, th) ==
            doctest::Approx(oracle_force(kGeom, kStroke, a, th)).epsilon(1e-8));
    }
  }
}

TEST_CASE("a torsion spring stores the same energy at any joint") {
  // Knees sweep theta, body and foot sweep pi - theta: equal deflection
  // magnitude, so the stored energy and charging force agree.
  std::vector<SpringInstance> at_a = {
      SpringInstance::rotational(kGeom, kStroke, JointId::A, 0.7)};
  std::vector<SpringInstance> at_b = {
      SpringInstance::rotational(kGeom, kStroke, JointId::B, 0.7)};
  for (double deg : {150.0, 90.0, 30.0}) {
    const double th = deg_to_rad(deg);
    CHECK(potential_energy(kGeom, at_a, th) ==
          doctest::Approx(potential_energy(kGeom, at_b, th)).epsilon(1e-10));
    CHECK(oracle_force(kGeom, kStroke, at_a, th) ==
          doctest::Approx(oracle_force(kGeom, kStroke, at_b, th)).epsilon(1e-8));
  }
}

TEST_CASE("verification passes for every closed form") {
  struct Config {
    SpringSpec spec;
    const char* label;
  };
  const std::vector<Config> configs = {
      {SpringSpec::vertical(200.0), "vertical"},
      {SpringSpec::horizontal(200.0), "horizontal"},
      {SpringSpec::rotational(0.7), "rotational"},
      {SpringSpec::model_a(0.25, 200.0), "a 0.25"},
      {SpringSpec::model_a(0.8, 200.0), "a 0.8"},
      {SpringSpec::model_b(0.25, 200.0), "b 0.25"},
      {SpringSpec::model_b(0.5, 200.0), "b 0.5"},
      {SpringSpec::model_b(0.75, 200.0), "b 0.75"},
      {SpringSpec::model_c(0.25, 200.0), "c 0.25"},
      {SpringSpec::model_c(0.75, 200.0), "c 0.75"},
  };
  for (const auto& c : configs) {
    CAPTURE(c.label);
    VerifyReport r = run_verification(c.spec, kGeom, kStroke);
    CHECK(r.passed);
    CHECK(r.max_rel_err <= 1e-6);
    CHECK(r.rows.size() == 101);
  }
}

TEST_CASE("verification report carries both angle branches for the spanning model") {
  VerifyReport r = run_verification(SpringSpec::model_a(1.0, 200.0), kGeom,
                                    kStroke);
  CHECK(r.passed);
  CHECK(r.branch_rows.size() == r.rows.size());
  CHECK(r.max_rel_err_geometric <= 1e-6);
  CHECK(r.max_rel_err_principal > 1e-3);
  CHECK(r.branch_note.find("geometric") != std::string::npos);

  // Where the angle never turns obtuse the branches coincide.
  VerifyReport low = run_verification(SpringSpec::model_a(0.0, 200.0), kGeom,
                                      kStroke);
  CHECK(low.passed);
  CHECK(low.max_rel_err_principal <= 1e-6);

  VerifyReport plain = run_verification(SpringSpec::vertical(200.0), kGeom,
                                        kStroke);
  CHECK(plain.branch_rows.empty());
  CHECK(plain.branch_note.empty());
}

TEST_CASE("verification input validation") {
  CHECK_THROWS_AS(run_verification(SpringSpec::vertical(1.0), kGeom, kStroke, 0),
                  ConfigError);
}
