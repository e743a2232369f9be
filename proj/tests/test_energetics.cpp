#include <cmath>

#include <doctest.h>

#include "springlink/energetics.hpp"
#include "springlink/oracle.hpp"

using namespace springlink;

namespace {

const LinkageGeometry kGeom{0.15};
const StrokeConfig kStroke = StrokeConfig::make(deg_to_rad(179.9), 0.0);

}  // namespace

TEST_CASE("upright clamp applies only to the singular families") {
  StrokeConfig full = StrokeConfig::make(kPi, 0.0);
  CHECK(effective_stroke(SpringSpec::vertical(1.0), full).theta_ini == kPi);
  CHECK(effective_stroke(SpringSpec::horizontal(1.0), full).theta_ini ==
        doctest::Approx(deg_to_rad(179.9)).epsilon(1e-15));
  CHECK(effective_stroke(SpringSpec::rotational(1.0), full).theta_ini ==
        doctest::Approx(deg_to_rad(179.9)).epsilon(1e-15));
  CHECK(effective_stroke(SpringSpec::model_a(0.8, 1.0), full).theta_ini == kPi);
  // A stroke living entirely inside the clamped band cannot be charged.
  StrokeConfig sliver = StrokeConfig::make(kPi, deg_to_rad(179.95));
  CHECK_THROWS_AS(effective_stroke(SpringSpec::horizontal(1.0), sliver),
                  SingularityError);
}

TEST_CASE("profile integration accumulates work over displacement") {
  SpringSpec spec = SpringSpec::vertical(200.0);
  ChargingProfile p =
      integrate_profile(force_fn(spec, kGeom, kStroke), kGeom, kStroke, 1000, 1.0);
  REQUIRE(p.samples.size() == 1000);
  CHECK(p.samples.front().theta == kStroke.theta_ini);
  CHECK(p.samples.back().theta == doctest::Approx(0.0));
  CHECK(p.samples.front().y == doctest::Approx(0.0));
  CHECK(p.samples.front().epe == 0.0);
  for (size_t i = 1; i < p.samples.size(); ++i) {
    CHECK(p.samples[i].theta < p.samples[i - 1].theta);
    CHECK(p.samples[i].y > p.samples[i - 1].y);
    CHECK(p.samples[i].epe >= p.samples[i - 1].epe);
  }
  // Quadrature against the exact stored energy of the spring.
  SpringInstance inst = SpringInstance::from_spec(spec, kGeom, kStroke);
  CHECK(p.final_epe() ==
        doctest::Approx(inst.energy(kGeom, 0.0)).epsilon(1e-4));
  CHECK_THROWS_AS(
      integrate_profile(force_fn(spec, kGeom, kStroke), kGeom, kStroke, 1, 1.0),
      ConfigError);
}

TEST_CASE("quadrature matches stored energy for positioned springs") {
  for (SpringSpec spec : {SpringSpec::model_a(0.8, 200.0),
                          SpringSpec::model_b(0.25, 200.0),
                          SpringSpec::model_c(0.75, 200.0)}) {
    ChargingProfile p = integrate_profile(force_fn(spec, kGeom, kStroke), kGeom,
                                          kStroke, 1000, 1.0);
    SpringInstance inst = SpringInstance::from_spec(spec, kGeom, kStroke);
    CHECK(p.final_epe() ==
          doctest::Approx(inst.energy(kGeom, 0.0)).epsilon(1e-4));
  }
}

TEST_CASE("doubling the sample count barely moves the energy") {
  struct Row {
    SpringSpec spec;
    StrokeConfig cfg;
  };
  const Row rows[] = {
      {SpringSpec::vertical(1.0), kStroke},
      {SpringSpec::horizontal(1.0), StrokeConfig::make(deg_to_rad(152), 0.0)},
      {SpringSpec::rotational(1.0), kStroke},
      {SpringSpec::model_a(0.8, 1.0), kStroke},
  };
  for (const auto& r : rows) {
    ChargingProfile p1 =
        integrate_profile(force_fn(r.spec, kGeom, r.cfg), kGeom, r.cfg, 1000, 1.0);
    ChargingProfile p2 =
        integrate_profile(force_fn(r.spec, kGeom, r.cfg), kGeom, r.cfg, 2000, 1.0);
    CHECK(std::abs(p2.final_epe() - p1.final_epe()) / p1.final_epe() < 1e-5);
  }
}

TEST_CASE("stiffness solver hits the requested peak") {
  StiffnessSolution v = solve_stiffness(SpringSpec::vertical(1.0), kGeom,
                                        kStroke, 1.0);
  CHECK(v.stiffness * kGeom.d() == doctest::Approx(1.0000003807718956).epsilon(1e-9));
  CHECK(v.theta_peak == doctest::Approx(0.0));

  StrokeConfig h152 = StrokeConfig::make(deg_to_rad(152), 0.0);
  StiffnessSolution h = solve_stiffness(SpringSpec::horizontal(1.0), kGeom,
                                        h152, 1.0);
  CHECK(h.stiffness * kGeom.d() == doctest::Approx(2.0899894683990516).epsilon(1e-9));
  CHECK(h.theta_peak ==
        doctest::Approx(peak_force_angle_horizontal(h152.theta_ini)).epsilon(1e-6));

  // Scaling the target scales the stiffness linearly.
  StiffnessSolution v5 = solve_stiffness(SpringSpec::vertical(1.0), kGeom,
                                         kStroke, 5.0);
  CHECK(v5.stiffness == doctest::Approx(5.0 * v.stiffness).epsilon(1e-12));

  CHECK_THROWS_AS(solve_stiffness(SpringSpec::model_a(0.5, 1.0), kGeom, kStroke, 1.0),
                  UnsolvableError);
}

TEST_CASE("per-type normalized stiffness") {
  CHECK(normalized_stiffness(SpringSpec::vertical(10.0), 10.0, 2.0, 0.3) ==
        doctest::Approx(1.5));
  CHECK(normalized_stiffness(SpringSpec::rotational(0.6), 0.6, 2.0, 0.3) ==
        doctest::Approx(1.0));
}

TEST_CASE("solved profiles reach the target peak and pin the energies") {
  ChargingProfile v = solved_profile(SpringSpec::vertical(1.0), kGeom, kStroke, 1.0);
  CHECK(v.peak_force() == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(v.normalized_energy() ==
        doctest::Approx(0.499999809614125).epsilon(1e-9));

  ChargingProfile r = solved_profile(SpringSpec::rotational(1.0), kGeom,
                                     kStroke, 1.0);
  CHECK(r.normalized_energy() ==
        doctest::Approx(0.7849615079945879).epsilon(1e-9));
  // The torsion stiffness normalizes by force times length.
  StiffnessSolution rs = solve_stiffness(SpringSpec::rotational(1.0), kGeom,
                                         kStroke, 1.0);
  CHECK(normalized_stiffness(SpringSpec::rotational(1.0), rs.stiffness, 1.0,
                             kGeom.d()) ==
        doctest::Approx(1.0 / (2.0 * kStroke.theta_ini)).epsilon(1e-9));

  StrokeConfig h152 = StrokeConfig::make(deg_to_rad(152), 0.0);
  ChargingProfile h = solved_profile(SpringSpec::horizontal(1.0), kGeom, h152, 1.0);
  CHECK(h.normalized_energy() ==
        doctest::Approx(0.6005393964538968).epsilon(1e-9));

  // Fully extended start: the singular families charge from the clamp angle.
  ChargingProfile rc = solved_profile(SpringSpec::rotational(1.0), kGeom,
                                      StrokeConfig::make(kPi, 0.0), 1.0);
  CHECK(rc.samples.front().theta ==
        doctest::Approx(deg_to_rad(179.9)).epsilon(1e-15));
}

TEST_CASE("position-ratio anchors for the spanning model") {
  struct Anchor {
    double gamma, n, k;
  };
  const Anchor anchors[] = {
      {0.8, 0.620110, 3.445072},
      {0.25, 0.629938, 5.039519},
      {0.45, 0.648794, 129.759},
  };
  for (const auto& a : anchors) {
    SpringSpec spec = SpringSpec::model_a(a.gamma, 1.0);
    ChargingProfile p = solved_profile(spec, kGeom, kStroke, 1.0);
    StiffnessSolution s = solve_stiffness(spec, kGeom, kStroke, 1.0);
    CHECK(p.normalized_energy() == doctest::Approx(a.n).epsilon(1e-5));
    CHECK(normalized_stiffness(spec, s.stiffness, 1.0, kGeom.d()) ==
          doctest::Approx(a.k).epsilon(1e-5));
  }
}

TEST_CASE("orientation sweep keeps degenerate ratios as gaps") {
  SweepResult a = sweep_orientation(SpringModel::ModelA, kGeom, kStroke, 1.0,
                                    101, 1000);
  REQUIRE(a.points.size() == 101);
  CHECK_FALSE(a.points[50].solvable);
  CHECK(a.points[50].note.find("degenerate") != std::string::npos);
  CHECK(a.points[80].solvable);
  CHECK(a.points[80].normalized_energy == doctest::Approx(0.620110).epsilon(1e-5));
  CHECK(a.points[80].normalized_stiffness ==
        doctest::Approx(3.445072).epsilon(1e-5));
  CHECK(a.points[0].solvable);
  CHECK(a.points[100].solvable);

  SweepResult b = sweep_orientation(SpringModel::ModelB, kGeom, kStroke, 1.0,
                                    11, 1000);
  REQUIRE(b.points.size() == 11);
  CHECK_FALSE(b.points[0].solvable);
  CHECK_FALSE(b.points[10].solvable);
  CHECK(b.points[5].solvable);
  // The half-ratio knee spring spans half the knee-knee diagonal, so its
  // normalized profile coincides with the full diagonal spring.
  ChargingProfile h = solved_profile(SpringSpec::horizontal(1.0), kGeom,
                                     kStroke, 1.0);
  CHECK(b.points[5].normalized_energy ==
        doctest::Approx(h.normalized_energy()).epsilon(1e-9));

  SweepResult c = sweep_orientation(SpringModel::ModelC, kGeom, kStroke, 1.0,
                                    11, 1000);
  CHECK_FALSE(c.points[0].solvable);
  CHECK_FALSE(c.points[10].solvable);
  CHECK(c.points[5].solvable);

  CHECK_THROWS_AS(sweep_orientation(SpringModel::Vertical, kGeom, kStroke, 1.0),
                  ConfigError);
  CHECK_THROWS_AS(
      sweep_orientation(SpringModel::ModelA, kGeom, kStroke, 1.0, 1),
      ConfigError);
}

TEST_CASE("diagonal pair superposes into a nearly constant force") {
  CompositeSpring comp{{SpringSpec::vertical(1.0), SpringSpec::horizontal(1.0)}};
  ForceFn f = superpose(comp, kGeom, kStroke);
  ChargingProfile p = integrate_profile(f, kGeom, kStroke, 1000, 1.0);
  const double n = p.final_epe() / (p.peak_force() * kGeom.d());
  CHECK(n == doctest::Approx(0.9991270990637912).epsilon(1e-9));

  const double cv = composition_cv(f, kGeom, kStroke);
  CHECK(cv < 0.002);
  CHECK(cv > 0.0005);

  // A single diagonal spring is linear in displacement; its flatness measure
  // sits at the uniform-ramp value.
  const double cv_v =
      composition_cv(force_fn(SpringSpec::vertical(1.0), kGeom, kStroke), kGeom,
                     kStroke);
  CHECK(cv_v > 0.57);
  CHECK(cv_v < 0.58);

  CHECK_THROWS_AS(superpose(CompositeSpring{}, kGeom, kStroke), ConfigError);
}

TEST_CASE("torsion plus knee-knee mix stores almost everything") {
  MixOptimum m = optimize_pair_mix(SpringSpec::rotational(1.0),
                                   SpringSpec::horizontal(1.0), kGeom, kStroke,
                                   1.0);
  CHECK(m.mix == doctest::Approx(0.267601559787888).epsilon(1e-4));
  CHECK(m.normalized_energy ==
        doctest::Approx(0.9698577934808585).epsilon(1e-9));
  CHECK(m.stiffness_first > 0.0);
  CHECK(m.stiffness_second > 0.0);
  CHECK_THROWS_AS(optimize_pair_mix(SpringSpec::model_a(0.5, 1.0),
                                    SpringSpec::horizontal(1.0), kGeom, kStroke,
                                    1.0),
                  UnsolvableError);
}
