#include "springlink/spring_models.hpp"

#include <cmath>
#include <string>

namespace springlink {

namespace {

void check_gamma(double gamma) {
  if (!(gamma >= 0.0) || !(gamma <= 1.0)) {
    throw ConfigError("position ratio must lie in [0, 1], got " +
                      std::to_string(gamma));
  }
}

void check_stiffness(double k) {
  if (!(k > 0.0) || !std::isfinite(k)) {
    throw ConfigError("stiffness must be positive and finite, got " +
                      std::to_string(k));
  }
}

// cos(theta/2) underflows to 0 only within ~2e-12 rad of full extension.
void check_not_upright(double half_cos) {
  if (std::abs(half_cos) < 1e-12) {
    throw SingularityError(
        "charging force is undefined at the fully extended position");
  }
}

}  // namespace

const char* to_string(SpringModel m) {
  switch (m) {
    case SpringModel::Vertical: return "vertical";
    case SpringModel::Horizontal: return "horizontal";
    case SpringModel::Rotational: return "rotational";
    case SpringModel::ModelA: return "model_a";
    case SpringModel::ModelB: return "model_b";
    case SpringModel::ModelC: return "model_c";
  }
  return "?";
}

bool SpringSpec::uses_gamma() const {
  return model == SpringModel::ModelA || model == SpringModel::ModelB ||
         model == SpringModel::ModelC;
}

bool SpringSpec::is_degenerate() const {
  switch (model) {
    case SpringModel::ModelA:
      return gamma == 0.5;
    case SpringModel::ModelB:
    case SpringModel::ModelC:
      return gamma == 0.0 || gamma == 1.0;
    default:
      return false;
  }
}

bool SpringSpec::singular_at_upright() const {
  switch (model) {
    case SpringModel::Horizontal:
    case SpringModel::Rotational:
      return true;
    case SpringModel::ModelA:
      return gamma == 1.0;
    case SpringModel::ModelB:
      return gamma == 0.5;
    default:
      return false;
  }
}

SpringSpec SpringSpec::with_stiffness(double k) const {
  check_stiffness(k);
  SpringSpec out = *this;
  out.stiffness = k;
  return out;
}

namespace {

SpringSpec make_spec(SpringModel model, double gamma, double k, int count) {
  check_stiffness(k);
  if (count < 1) {
    throw ConfigError("spring count must be at least 1, got " +
                      std::to_string(count));
  }
  return SpringSpec{model, gamma, k, count};
}

}  // namespace

SpringSpec SpringSpec::vertical(double k, int count) {
  return make_spec(SpringModel::Vertical, 0.0, k, count);
}

SpringSpec SpringSpec::horizontal(double k, int count) {
  return make_spec(SpringModel::Horizontal, 0.0, k, count);
}

SpringSpec SpringSpec::rotational(double k_r, int count) {
  return make_spec(SpringModel::Rotational, 0.0, k_r, count);
}

SpringSpec SpringSpec::model_a(double gamma, double k, int count) {
  check_gamma(gamma);
  return make_spec(SpringModel::ModelA, gamma, k, count);
}

SpringSpec SpringSpec::model_b(double gamma, double k, int count) {
  check_gamma(gamma);
  return make_spec(SpringModel::ModelB, gamma, k, count);
}

SpringSpec SpringSpec::model_c(double gamma, double k, int count) {
  check_gamma(gamma);
  return make_spec(SpringModel::ModelC, gamma, k, count);
}

double spring_length_model_a(const LinkageGeometry& geom, double gamma,
                             double theta) {
  check_gamma(gamma);
  const double s = std::sin(theta / 2.0);
  return geom.d() * std::sqrt(gamma * gamma + (1.0 - 2.0 * gamma) * s * s);
}

double spring_length_model_b(const LinkageGeometry& geom, double gamma,
                             double theta) {
  check_gamma(gamma);
  const double s = std::sin(theta / 2.0);
  return 0.5 * geom.d() * std::sqrt(1.0 + 4.0 * gamma * (gamma - 1.0) * s * s);
}

double spring_length_model_c(const LinkageGeometry& geom, double gamma,
                             double theta) {
  check_gamma(gamma);
  const double s = std::sin(theta / 2.0);
  const double m = 2.0 * gamma - 1.0;
  return geom.link_length * std::sqrt(m * m + 4.0 * gamma * (1.0 - gamma) * s * s);
}

double charging_force_vertical(const LinkageGeometry& geom,
                               const StrokeConfig& cfg, double k,
                               double theta) {
  const double s_i = std::sin(cfg.theta_ini / 2.0);
  const double s = std::sin(theta / 2.0);
  return k * geom.d() * (s_i - s);
}

double charging_force_horizontal(const LinkageGeometry& geom,
                                 const StrokeConfig& cfg, double k,
                                 double theta) {
  const double c = std::cos(theta / 2.0);
  check_not_upright(c);
  const double c_i = std::cos(cfg.theta_ini / 2.0);
  const double s = std::sin(theta / 2.0);
  return k * geom.d() * (s / c) * (c - c_i);
}

double charging_force_rotational(const LinkageGeometry& geom,
                                 const StrokeConfig& cfg, double k_r,
                                 double theta) {
  const double c = std::cos(theta / 2.0);
  check_not_upright(c);
  return 2.0 * k_r * (cfg.theta_ini - theta) / (geom.d() * c);
}

double charging_force_model_a(const LinkageGeometry& geom,
                              const StrokeConfig& cfg, double gamma, double k,
                              double theta) {
  const double s_i = std::sin(cfg.theta_ini / 2.0);
  const double s = std::sin(theta / 2.0);
  const double len = spring_length_model_a(geom, gamma, theta);
  if (len == 0.0) {
    // gamma = 0 collapses onto the body-foot diagonal; the depressed-end
    // limit equals the diagonal spring's force. gamma = 1 collapses onto
    // the knee-knee diagonal, which has no finite limit at full extension.
    if (gamma == 0.0) return k * geom.d() * (s_i - s);
    throw SingularityError(
        "charging force is undefined at the fully extended position");
  }
  const double natural = spring_length_model_a(geom, gamma, cfg.theta_ini);
  return k * (natural - len) * geom.d() * (1.0 - 2.0 * gamma) * s / len;
}

double charging_force_model_b(const LinkageGeometry& geom,
                              const StrokeConfig& cfg, double gamma, double k,
                              double theta) {
  const double s = std::sin(theta / 2.0);
  const double len = spring_length_model_b(geom, gamma, theta);
  if (len == 0.0) {
    // Only gamma = 1/2 at full extension: both ends meet at the centre.
    throw SingularityError(
        "charging force is undefined at the fully extended position");
  }
  const double natural = spring_length_model_b(geom, gamma, cfg.theta_ini);
  return k * (natural - len) * geom.d() * gamma * (gamma - 1.0) * s / len;
}

double charging_force_model_c(const LinkageGeometry& geom,
                              const StrokeConfig& cfg, double gamma, double k,
                              double theta) {
  const double s_i = std::sin(cfg.theta_ini / 2.0);
  const double s = std::sin(theta / 2.0);
  const double len = spring_length_model_c(geom, gamma, theta);
  if (len == 0.0) {
    // Only gamma = 1/2 at theta = 0; the limit is a quarter of the
    // body-foot diagonal spring's force.
    return 0.25 * k * geom.d() * (s_i - s);
  }
  const double natural = spring_length_model_c(geom, gamma, cfg.theta_ini);
  return k * (natural - len) * geom.d() * gamma * (1.0 - gamma) * s / len;
}

double charging_force(const SpringSpec& spec, const LinkageGeometry& geom,
                      const StrokeConfig& cfg, double theta) {
  const double k = spec.effective_stiffness();
  switch (spec.model) {
    case SpringModel::Vertical:
      return charging_force_vertical(geom, cfg, k, theta);
    case SpringModel::Horizontal:
      return charging_force_horizontal(geom, cfg, k, theta);
    case SpringModel::Rotational:
      return charging_force_rotational(geom, cfg, k, theta);
    case SpringModel::ModelA:
      return charging_force_model_a(geom, cfg, spec.gamma, k, theta);
    case SpringModel::ModelB:
      return charging_force_model_b(geom, cfg, spec.gamma, k, theta);
    case SpringModel::ModelC:
      return charging_force_model_c(geom, cfg, spec.gamma, k, theta);
  }
  throw DomainError("unknown spring model");
}

double charging_force_model_a_phi(const LinkageGeometry& geom,
                                  const StrokeConfig& cfg, double gamma,
                                  double k, double theta, PhiBranch branch) {
  check_gamma(gamma);
  const double s = std::sin(theta / 2.0);
  const double c = std::cos(theta / 2.0);
  const double sin_theta = std::sin(theta);
  if (sin_theta == 0.0) {
    throw DomainError(
        "moment-balance form is indeterminate where sin(theta) vanishes");
  }
  const double len = spring_length_model_a(geom, gamma, theta);
  if (len == 0.0) {
    throw DomainError("spring length vanished; no angle to resolve");
  }
  const double natural = spring_length_model_a(geom, gamma, cfg.theta_ini);
  const double deflection = natural - len;

  double phi;
  if (branch == PhiBranch::Geometric) {
    // Angle of the spring against link BA from the attachment coordinates;
    // obtuse when gamma exceeds sin^2(theta/2).
    phi = std::atan2(s * c, s * s - gamma);
  } else {
    double arg = geom.d() * sin_theta / (2.0 * len);
    if (arg > 1.0) arg = 1.0;
    if (arg < -1.0) arg = -1.0;
    phi = std::asin(arg);
  }

  const double bracket = (1.0 - gamma) * std::sin(theta / 2.0 + phi) * c +
                         gamma * std::cos(theta / 2.0 + phi) * s;
  return k * deflection / sin_theta * 2.0 * s * bracket;
}

SpringState spring_state(const SpringSpec& spec, const LinkageGeometry& geom,
                         const StrokeConfig& cfg, double theta) {
  SpringState st;
  st.force = charging_force(spec, geom, cfg, theta);

  if (spec.is_rotational()) {
    st.length = 0.0;
    st.deflection = cfg.theta_ini - theta;
    st.phi = 0.0;
    st.extended = st.deflection < 0.0;
    return st;
  }

  LinkId first = LinkId::BA;
  LinkId second = LinkId::FD;
  double f1 = spec.gamma;
  double f2 = spec.gamma;
  switch (spec.model) {
    case SpringModel::Vertical: f1 = f2 = 0.0; break;
    case SpringModel::Horizontal: f1 = f2 = 1.0; break;
    case SpringModel::ModelA: break;
    case SpringModel::ModelB:
      second = LinkId::BD;
      f2 = 1.0 - spec.gamma;  // ratio is measured from D
      break;
    case SpringModel::ModelC:
      second = LinkId::AF;
      break;
    default: break;
  }

  const JointFrame now = joint_frame(geom, theta);
  const JointFrame start = joint_frame(geom, cfg.theta_ini);
  const Vec2 k1 = attachment_point(now, first, f1);
  const Vec2 k2 = attachment_point(now, second, f2);
  st.length = norm(k2 - k1);
  st.deflection = norm(attachment_point(start, second, f2) -
                       attachment_point(start, first, f1)) -
                  st.length;
  const Vec2 spring_dir = k2 - k1;
  const Vec2 link_dir = now.A - now.B;
  st.phi = std::atan2(std::abs(cross(spring_dir, link_dir)),
                      dot(spring_dir, link_dir));
  st.extended = st.deflection < 0.0;
  return st;
}

double peak_force_angle_horizontal(double theta_ini) {
  if (!(theta_ini > 0.0) || theta_ini > kPi) {
    throw ConfigError("theta_ini must lie in (0, pi]");
  }
  return 2.0 * std::acos(std::cbrt(std::cos(theta_ini / 2.0)));
}

double epe_vertical(const StrokeConfig& cfg, double f_max, double d,
                    double theta_end) {
  const double s_i = std::sin(cfg.theta_ini / 2.0);
  const double s_e = std::sin(theta_end / 2.0);
  return 0.5 * f_max * d * (s_i - s_e);
}

double epe_horizontal(const StrokeConfig& cfg, double f_max, double d,
                      double theta_end) {
  const double c_i = std::cos(cfg.theta_ini / 2.0);
  const double c_e = std::cos(theta_end / 2.0);
  const double theta_p = peak_force_angle_horizontal(cfg.theta_ini);
  if (theta_end <= theta_p) {
    // Force tops out inside the stroke, at the cube-root angle.
    const double c_p = std::cos(theta_p / 2.0);
    const double de = c_e - c_i;
    return f_max * d * de * de / (2.0 * std::tan(theta_p / 2.0) * (c_p - c_i));
  }
  // Stroke stops before the peak; the maximum force sits at the end angle.
  return f_max * d * (c_e - c_i) / (2.0 * std::tan(theta_end / 2.0));
}

double epe_rotational(const StrokeConfig& cfg, double f_max, double d) {
  return 0.25 * f_max * d * (cfg.theta_ini - cfg.theta_end) *
         std::cos(cfg.theta_end / 2.0);
}

}  // namespace springlink
