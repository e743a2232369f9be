#include "springlink/oracle.hpp"

#include <cmath>

namespace springlink {

namespace {

// Interior angle at a joint from the coordinates of its two neighbours.
// Deliberately does not reuse the analytic joint_angle() so the oracle
// stays an independent check on it.
double coordinate_joint_angle(const JointFrame& frame, JointId joint) {
  JointId n1, n2;
  switch (joint) {
    case JointId::A:
    case JointId::D:
      n1 = JointId::B; n2 = JointId::F; break;
    case JointId::B:
    case JointId::F:
      n1 = JointId::A; n2 = JointId::D; break;
    default:
      throw DomainError("unknown joint id");
  }
  const Vec2 p = frame.joint(joint);
  const Vec2 u = frame.joint(n1) - p;
  const Vec2 v = frame.joint(n2) - p;
  return std::atan2(std::abs(cross(u, v)), dot(u, v));
}

}  // namespace

SpringInstance SpringInstance::translational(const LinkageGeometry& geom,
                                             const StrokeConfig& cfg,
                                             SpringEndpoint a, SpringEndpoint b,
                                             double k) {
  SpringInstance inst;
  inst.kind = Kind::Translational;
  inst.end_a = a;
  inst.end_b = b;
  inst.stiffness = k;
  const JointFrame start = joint_frame(geom, cfg.theta_ini);
  inst.natural = norm(attachment_point(start, b.link, b.fraction) -
                      attachment_point(start, a.link, a.fraction));
  return inst;
}

SpringInstance SpringInstance::rotational(const LinkageGeometry& geom,
                                          const StrokeConfig& cfg,
                                          JointId joint, double k_r) {
  SpringInstance inst;
  inst.kind = Kind::Rotational;
  inst.joint = joint;
  inst.stiffness = k_r;
  inst.natural = coordinate_joint_angle(joint_frame(geom, cfg.theta_ini), joint);
  return inst;
}

SpringInstance SpringInstance::from_spec(const SpringSpec& spec,
                                         const LinkageGeometry& geom,
                                         const StrokeConfig& cfg) {
  const double k = spec.effective_stiffness();
  switch (spec.model) {
    case SpringModel::Vertical:
      return translational(geom, cfg, {LinkId::BA, 0.0}, {LinkId::FD, 0.0}, k);
    case SpringModel::Horizontal:
      return translational(geom, cfg, {LinkId::BA, 1.0}, {LinkId::FD, 1.0}, k);
    case SpringModel::Rotational:
      return rotational(geom, cfg, JointId::A, k);
    case SpringModel::ModelA:
      return translational(geom, cfg, {LinkId::BA, spec.gamma},
                           {LinkId::FD, spec.gamma}, k);
    case SpringModel::ModelB:
      // The second ratio is measured from D, the far end of link BD.
      return translational(geom, cfg, {LinkId::BA, spec.gamma},
                           {LinkId::BD, 1.0 - spec.gamma}, k);
    case SpringModel::ModelC:
      return translational(geom, cfg, {LinkId::BA, spec.gamma},
                           {LinkId::AF, spec.gamma}, k);
  }
  throw DomainError("unknown spring model");
}

double SpringInstance::current_value(const LinkageGeometry& geom,
                                     double theta) const {
  const JointFrame fr = joint_frame(geom, theta);
  if (kind == Kind::Rotational) {
    return coordinate_joint_angle(fr, joint);
  }
  return norm(attachment_point(fr, end_b.link, end_b.fraction) -
              attachment_point(fr, end_a.link, end_a.fraction));
}

double SpringInstance::energy(const LinkageGeometry& geom, double theta) const {
  const double delta = current_value(geom, theta) - natural;
  return 0.5 * stiffness * delta * delta;
}

double potential_energy(const LinkageGeometry& geom,
                        const std::vector<SpringInstance>& springs,
                        double theta) {
  double u = 0.0;
  for (const auto& s : springs) u += s.energy(geom, theta);
  return u;
}

namespace {

double central_difference(const LinkageGeometry& geom, const StrokeConfig& cfg,
                          const std::vector<SpringInstance>& springs, double y,
                          double h) {
  const double up = potential_energy(geom, springs,
                                     theta_from_displacement(geom, cfg, y + h));
  const double dn = potential_energy(geom, springs,
                                     theta_from_displacement(geom, cfg, y - h));
  return (up - dn) / (2.0 * h);
}

}  // namespace

double oracle_force_plain(const LinkageGeometry& geom, const StrokeConfig& cfg,
                          const std::vector<SpringInstance>& springs,
                          double theta, double step) {
  const double h = step > 0.0 ? step : geom.d() * 1e-6;
  const double y = body_displacement(geom, cfg, theta);
  return central_difference(geom, cfg, springs, y, h);
}

double oracle_force(const LinkageGeometry& geom, const StrokeConfig& cfg,
                    const std::vector<SpringInstance>& springs, double theta,
                    double step) {
  const double h = step > 0.0 ? step : geom.d() * 1e-6;
  const double y = body_displacement(geom, cfg, theta);
  const double f1 = central_difference(geom, cfg, springs, y, h);
  const double f2 = central_difference(geom, cfg, springs, y, h / 2.0);
  return (4.0 * f2 - f1) / 3.0;
}

namespace {

// Relative difference with an absolute floor so angles where both values
// vanish do not register as error.
double relative_difference(double a, double b) {
  const double m = std::max(std::abs(a), std::abs(b));
  if (m < 1e-9) return 0.0;
  return std::abs(a - b) / m;
}

}  // namespace

VerifyReport run_verification(const SpringSpec& spec,
                              const LinkageGeometry& geom,
                              const StrokeConfig& cfg, int n_points,
                              double tolerance) {
  if (n_points < 1) {
    throw ConfigError("verification needs at least one sample point");
  }
  VerifyReport report;
  report.spec = spec;
  report.step = geom.d() * 1e-6;
  report.tolerance = tolerance;

  const std::vector<SpringInstance> springs = {
      SpringInstance::from_spec(spec, geom, cfg)};
  const double span = cfg.theta_ini - cfg.theta_end;
  const bool is_model_a = spec.model == SpringModel::ModelA;

  for (int j = 0; j < n_points; ++j) {
    // Midpoints, start to end, strictly inside the stroke.
    const double theta = cfg.theta_ini - span * (j + 0.5) / n_points;
    const double f_oracle = oracle_force(geom, cfg, springs, theta);
    const double f_closed = charging_force(spec, geom, cfg, theta);
    VerifyRow row{theta, f_closed, f_oracle,
                  relative_difference(f_closed, f_oracle)};
    report.max_rel_err = std::max(report.max_rel_err, row.rel_err);
    report.rows.push_back(row);

    if (is_model_a) {
      const double k = spec.effective_stiffness();
      const double f_geo = charging_force_model_a_phi(
          geom, cfg, spec.gamma, k, theta, PhiBranch::Geometric);
      const double f_pri = charging_force_model_a_phi(
          geom, cfg, spec.gamma, k, theta, PhiBranch::PrincipalAsin);
      report.branch_rows.push_back({theta, f_geo, f_pri, f_oracle});
      report.max_rel_err_geometric = std::max(
          report.max_rel_err_geometric, relative_difference(f_geo, f_oracle));
      report.max_rel_err_principal = std::max(
          report.max_rel_err_principal, relative_difference(f_pri, f_oracle));
    }
  }

  report.passed = report.max_rel_err <= tolerance;
  if (is_model_a) {
    const bool geo_ok = report.max_rel_err_geometric <= tolerance;
    const bool pri_ok = report.max_rel_err_principal <= tolerance;
    if (geo_ok && pri_ok) {
      report.branch_note = "both phi branches agree with the oracle";
    } else if (geo_ok) {
      report.branch_note =
          "geometric phi branch tracks the oracle; the principal "
          "inverse-sine branch diverges where gamma exceeds sin^2(theta/2)";
    } else {
      report.branch_note = "neither phi branch tracks the oracle";
    }
  }
  return report;
}

}  // namespace springlink
