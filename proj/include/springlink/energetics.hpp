#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "springlink/spring_models.hpp"

namespace springlink {

using ForceFn = std::function<double(double theta)>;

struct ProfileSample {
  double theta = 0.0;  // rad
  double y = 0.0;      // body displacement, m
  double force = 0.0;  // N
  double epe = 0.0;    // cumulative stored energy, J
};

struct ChargingProfile {
  std::vector<ProfileSample> samples;  // theta descending from the stroke start
  double f_max = 1.0;                  // normalization force, N
  double d = 0.3;                      // characteristic length, m

  double final_epe() const;
  double peak_force() const;
  double normalized_energy() const;  // final_epe / (f_max * d)
};

// Clamps the stroke start to 179.9 deg for springs whose force is undefined
// at the upright posture.
StrokeConfig effective_stroke(const SpringSpec& spec, const StrokeConfig& cfg);

// Samples `force` on n_points angles uniform in theta across the stroke and
// accumulates EPE with the cumulative trapezoid rule over y.
ChargingProfile integrate_profile(const ForceFn& force, const LinkageGeometry& geom,
                                  const StrokeConfig& cfg, int n_points,
                                  double f_max);

// Charging force of one spring bound to geometry and stroke (stiffness folded).
ForceFn force_fn(const SpringSpec& spec, const LinkageGeometry& geom,
                 const StrokeConfig& cfg);

struct StiffnessSolution {
  double stiffness = 0.0;       // k* such that max F = f_max
  double peak_unit_force = 0.0; // max F at unit stiffness
  double theta_peak = 0.0;      // where the maximum sits
};

// Charging force is linear in stiffness, so k* = f_max / max(unit force).
// Grid scan plus golden-section refinement; UnsolvableError when the spring
// cannot produce force.
StiffnessSolution solve_stiffness(const ForceFn& unit_force, const StrokeConfig& cfg,
                                  double f_max, int n_grid = 4096);
StiffnessSolution solve_stiffness(const SpringSpec& spec, const LinkageGeometry& geom,
                                  const StrokeConfig& cfg, double f_max);

// k*d/f_max for translational springs, k/(f_max*d) for rotational.
double normalized_stiffness(const SpringSpec& spec, double stiffness, double f_max,
                            double d);

// Profile of a spring with stiffness solved to reach f_max within the stroke.
ChargingProfile solved_profile(const SpringSpec& spec, const LinkageGeometry& geom,
                               const StrokeConfig& cfg, double f_max,
                               int n_points = 1000);

struct CompositeSpring {
  std::vector<SpringSpec> components;
};

// Sum of the component charging forces. Singularities propagate.
ForceFn superpose(const CompositeSpring& comp, const LinkageGeometry& geom,
                  const StrokeConfig& cfg);

// Flatness of a force profile: coefficient of variation of F sampled
// uniformly in body displacement, excluding the first sample at theta_ini
// (consistently zero or singular there).
double composition_cv(const ForceFn& force, const LinkageGeometry& geom,
                      const StrokeConfig& cfg, int n_points = 1000);

struct SweepPoint {
  double gamma = 0.0;
  bool solvable = false;
  double normalized_energy = 0.0;
  double normalized_stiffness = 0.0;
  std::string note;  // reason when unsolvable
};

struct SweepResult {
  SpringModel model = SpringModel::ModelA;
  std::vector<SweepPoint> points;
};

// Normalized stored energy and required stiffness across the position-ratio
// grid (n_gamma uniform points on [0,1]). Degenerate ratios are kept as
// explicit unsolvable gap markers.
SweepResult sweep_orientation(SpringModel model, const LinkageGeometry& geom,
                              const StrokeConfig& cfg, double f_max,
                              int n_gamma = 101, int n_points = 1000);

struct MixOptimum {
  double mix = 0.0;                // weight of the second component in [0,1]
  double normalized_energy = 0.0;
  double stiffness_first = 0.0;    // solved stiffness scaled by (1-mix)
  double stiffness_second = 0.0;   // solved stiffness scaled by mix
};

// Maximizes normalized EPE of (1-m)*first + m*second over the mix weight,
// where each component is first normalized to unit peak force. Golden-section
// search to `tol` on the mix.
MixOptimum optimize_pair_mix(const SpringSpec& first, const SpringSpec& second,
                             const LinkageGeometry& geom, const StrokeConfig& cfg,
                             double f_max, int n_points = 1000, double tol = 1e-6);

}  // namespace springlink
