#include "springlink/energetics.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "springlink/geometry.hpp"

namespace springlink {

namespace {

const double kUprightClamp = deg_to_rad(179.9);

StrokeConfig clamp_upright(const StrokeConfig& cfg) {
  if (cfg.theta_ini <= kUprightClamp) return cfg;
  if (cfg.theta_end >= kUprightClamp) {
    throw SingularityError(
        "the stroke lies entirely within the singular neighbourhood of the "
        "upright posture; nothing remains after clamping the start to "
        "179.9 deg");
  }
  return StrokeConfig::make(kUprightClamp, cfg.theta_end);
}

}  // namespace

double ChargingProfile::final_epe() const {
  return samples.empty() ? 0.0 : samples.back().epe;
}

double ChargingProfile::peak_force() const {
  double peak = 0.0;
  for (const auto& s : samples) peak = std::max(peak, s.force);
  return peak;
}

double ChargingProfile::normalized_energy() const {
  return final_epe() / (f_max * d);
}

StrokeConfig effective_stroke(const SpringSpec& spec, const StrokeConfig& cfg) {
  return spec.singular_at_upright() ? clamp_upright(cfg) : cfg;
}

ChargingProfile integrate_profile(const ForceFn& force,
                                  const LinkageGeometry& geom,
                                  const StrokeConfig& cfg, int n_points,
                                  double f_max) {
  if (n_points < 2) {
    throw ConfigError("profile needs at least two sample points");
  }
  ChargingProfile prof;
  prof.f_max = f_max;
  prof.d = geom.d();
  prof.samples.reserve(n_points);
  const double span = cfg.theta_ini - cfg.theta_end;
  double epe = 0.0;
  for (int j = 0; j < n_points; ++j) {
    const double theta = cfg.theta_ini - span * j / (n_points - 1);
    ProfileSample s;
    s.theta = theta;
    s.y = body_displacement(geom, cfg, theta);
    s.force = force(theta);
    if (j > 0) {
      const ProfileSample& prev = prof.samples.back();
      epe += 0.5 * (s.force + prev.force) * (s.y - prev.y);
    }
    s.epe = epe;
    prof.samples.push_back(s);
  }
  return prof;
}

ForceFn force_fn(const SpringSpec& spec, const LinkageGeometry& geom,
                 const StrokeConfig& cfg) {
  return [spec, geom, cfg](double theta) {
    return charging_force(spec, geom, cfg, theta);
  };
}

StiffnessSolution solve_stiffness(const ForceFn& unit_force,
                                  const StrokeConfig& cfg, double f_max,
                                  int n_grid) {
  if (!(f_max > 0.0)) {
    throw ConfigError("target peak force must be positive");
  }
  if (n_grid < 3) {
    throw ConfigError("stiffness solver grid needs at least three points");
  }

  // Coarse scan, ascending in theta.
  std::vector<double> grid(n_grid), vals(n_grid);
  const double span = cfg.theta_ini - cfg.theta_end;
  int best = 0;
  for (int j = 0; j < n_grid; ++j) {
    grid[j] = cfg.theta_end + span * j / (n_grid - 1);
    vals[j] = unit_force(grid[j]);
    if (vals[j] > vals[best]) best = j;
  }

  // Golden-section refinement inside the bracketing grid cell pair.
  const double invphi = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = grid[std::max(0, best - 1)];
  double b = grid[std::min(n_grid - 1, best + 1)];
  double x1 = b - invphi * (b - a);
  double x2 = a + invphi * (b - a);
  double f1 = unit_force(x1);
  double f2 = unit_force(x2);
  for (int it = 0; it < 200 && b - a >= 1e-13; ++it) {
    if (f1 < f2) {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + invphi * (b - a);
      f2 = unit_force(x2);
    } else {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - invphi * (b - a);
      f1 = unit_force(x1);
    }
  }
  const double xm = 0.5 * (a + b);
  const double fm = unit_force(xm);

  StiffnessSolution sol;
  if (fm >= vals[best]) {
    sol.peak_unit_force = fm;
    sol.theta_peak = xm;
  } else {
    sol.peak_unit_force = vals[best];
    sol.theta_peak = grid[best];
  }
  if (!(sol.peak_unit_force > 0.0)) {
    throw UnsolvableError(
        "charging force never becomes positive over the stroke; "
        "no stiffness can reach the target peak force");
  }
  sol.stiffness = f_max / sol.peak_unit_force;
  return sol;
}

StiffnessSolution solve_stiffness(const SpringSpec& spec,
                                  const LinkageGeometry& geom,
                                  const StrokeConfig& cfg, double f_max) {
  if (spec.is_degenerate()) {
    throw UnsolvableError(
        "degenerate orientation: spring length is constant over the stroke, "
        "charging force is identically zero");
  }
  SpringSpec unit = spec;
  unit.stiffness = 1.0;
  unit.count = 1;
  const StrokeConfig eff = effective_stroke(spec, cfg);
  // Solution stiffness is the effective (count-folded) value.
  return solve_stiffness(force_fn(unit, geom, eff), eff, f_max);
}

double normalized_stiffness(const SpringSpec& spec, double stiffness,
                            double f_max, double d) {
  if (spec.is_rotational()) return stiffness / (f_max * d);
  return stiffness * d / f_max;
}

ChargingProfile solved_profile(const SpringSpec& spec,
                               const LinkageGeometry& geom,
                               const StrokeConfig& cfg, double f_max,
                               int n_points) {
  const StrokeConfig eff = effective_stroke(spec, cfg);
  const StiffnessSolution sol = solve_stiffness(spec, geom, cfg, f_max);
  SpringSpec solved = spec;
  solved.stiffness = sol.stiffness;
  solved.count = 1;
  return integrate_profile(force_fn(solved, geom, eff), geom, eff, n_points,
                           f_max);
}

ForceFn superpose(const CompositeSpring& comp, const LinkageGeometry& geom,
                  const StrokeConfig& cfg) {
  if (comp.components.empty()) {
    throw ConfigError("composite spring needs at least one component");
  }
  return [comp, geom, cfg](double theta) {
    double f = 0.0;
    for (const auto& spec : comp.components) {
      f += charging_force(spec, geom, cfg, theta);
    }
    return f;
  };
}

double composition_cv(const ForceFn& force, const LinkageGeometry& geom,
                      const StrokeConfig& cfg, int n_points) {
  if (n_points < 3) {
    throw ConfigError("flatness measure needs at least three sample points");
  }
  // Uniform in displacement, not in knee angle: equal weight per unit of
  // stroke travelled. The first sample (zero or singular force) is dropped.
  const double y_end = body_displacement(geom, cfg, cfg.theta_end);
  double sum = 0.0, sum_sq = 0.0;
  const int n_used = n_points - 1;
  for (int j = 1; j < n_points; ++j) {
    const double y = y_end * j / (n_points - 1);
    const double f = force(theta_from_displacement(geom, cfg, y));
    sum += f;
    sum_sq += f * f;
  }
  const double mean = sum / n_used;
  if (!(mean > 0.0)) {
    throw DomainError("mean charging force is not positive; "
                      "flatness is undefined");
  }
  const double variance = std::max(0.0, sum_sq / n_used - mean * mean);
  return std::sqrt(variance) / mean;
}

SweepResult sweep_orientation(SpringModel model, const LinkageGeometry& geom,
                              const StrokeConfig& cfg, double f_max,
                              int n_gamma, int n_points) {
  if (n_gamma < 2) {
    throw ConfigError("orientation sweep needs at least two ratios");
  }
  if (model != SpringModel::ModelA && model != SpringModel::ModelB &&
      model != SpringModel::ModelC) {
    throw ConfigError("orientation sweeps apply to the positioned models only");
  }
  SweepResult out;
  out.model = model;
  out.points.reserve(n_gamma);
  for (int j = 0; j < n_gamma; ++j) {
    const double gamma = static_cast<double>(j) / (n_gamma - 1);
    SweepPoint pt;
    pt.gamma = gamma;
    SpringSpec spec{model, gamma, 1.0, 1};
    if (spec.is_degenerate()) {
      pt.solvable = false;
      pt.note = "degenerate orientation: zero charging force";
      out.points.push_back(pt);
      continue;
    }
    const ChargingProfile prof = solved_profile(spec, geom, cfg, f_max, n_points);
    const StiffnessSolution sol = solve_stiffness(spec, geom, cfg, f_max);
    pt.solvable = true;
    pt.normalized_energy = prof.normalized_energy();
    pt.normalized_stiffness =
        normalized_stiffness(spec, sol.stiffness, f_max, geom.d());
    out.points.push_back(pt);
  }
  return out;
}

MixOptimum optimize_pair_mix(const SpringSpec& first, const SpringSpec& second,
                             const LinkageGeometry& geom,
                             const StrokeConfig& cfg, double f_max,
                             int n_points, double tol) {
  if (first.is_degenerate() || second.is_degenerate()) {
    throw UnsolvableError("cannot mix a degenerate component");
  }
  StrokeConfig eff = cfg;
  if (first.singular_at_upright() || second.singular_at_upright()) {
    eff = clamp_upright(eff);
  }

  // Unit-peak components: per-spring stiffness that makes each peak at 1 N.
  SpringSpec u1 = first, u2 = second;
  u1.stiffness = u2.stiffness = 1.0;
  u1.count = u2.count = 1;
  const ForceFn f1 = force_fn(u1, geom, eff);
  const ForceFn f2 = force_fn(u2, geom, eff);
  const double k1 = solve_stiffness(f1, eff, 1.0).stiffness;
  const double k2 = solve_stiffness(f2, eff, 1.0).stiffness;

  const auto mixed_profile = [&](double m) {
    const ForceFn f = [&, m](double theta) {
      return (1.0 - m) * k1 * f1(theta) + m * k2 * f2(theta);
    };
    return integrate_profile(f, geom, eff, n_points, f_max);
  };
  const auto objective = [&](double m) {
    const ChargingProfile p = mixed_profile(m);
    return p.final_epe() / (p.peak_force() * geom.d());
  };

  const double invphi = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = 0.0, b = 1.0;
  double x1 = b - invphi * (b - a);
  double x2 = a + invphi * (b - a);
  double g1 = objective(x1);
  double g2 = objective(x2);
  while (b - a > tol) {
    if (g1 < g2) {
      a = x1;
      x1 = x2;
      g1 = g2;
      x2 = a + invphi * (b - a);
      g2 = objective(x2);
    } else {
      b = x2;
      x2 = x1;
      g2 = g1;
      x1 = b - invphi * (b - a);
      g1 = objective(x1);
    }
  }

  MixOptimum opt;
  opt.mix = 0.5 * (a + b);
  const ChargingProfile best = mixed_profile(opt.mix);
  const double peak = best.peak_force();
  opt.normalized_energy = best.final_epe() / (peak * geom.d());
  const double scale = f_max / peak;
  opt.stiffness_first = scale * (1.0 - opt.mix) * k1;
  opt.stiffness_second = scale * opt.mix * k2;
  return opt;
}

}  // namespace springlink
