#include "springlink/geometry.hpp"

#include <cmath>
#include <string>

namespace springlink {

double norm(Vec2 v) { return std::hypot(v.x, v.y); }

double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }

double cross(Vec2 a, Vec2 b) { return a.x * b.y - a.y * b.x; }

LinkageGeometry LinkageGeometry::from_link_length(double link_length) {
  if (!(link_length > 0.0) || !std::isfinite(link_length)) {
    throw ConfigError("link length must be positive and finite, got " +
                      std::to_string(link_length));
  }
  return LinkageGeometry{link_length};
}

StrokeConfig StrokeConfig::make(double theta_ini, double theta_end) {
  if (!std::isfinite(theta_ini) || !std::isfinite(theta_end)) {
    throw ConfigError("stroke angles must be finite");
  }
  if (!(theta_ini > 0.0) || theta_ini > kPi) {
    throw ConfigError("theta_ini must lie in (0, pi], got " +
                      std::to_string(theta_ini) + " rad");
  }
  if (theta_end < 0.0 || !(theta_end < theta_ini)) {
    throw ConfigError("theta_end must lie in [0, theta_ini), got " +
                      std::to_string(theta_end) + " rad");
  }
  return StrokeConfig{theta_ini, theta_end};
}

const char* to_string(LinkId id) {
  switch (id) {
    case LinkId::BA: return "BA";
    case LinkId::BD: return "BD";
    case LinkId::AF: return "AF";
    case LinkId::FD: return "FD";
  }
  return "?";
}

const char* to_string(JointId id) {
  switch (id) {
    case JointId::B: return "B";
    case JointId::A: return "A";
    case JointId::D: return "D";
    case JointId::F: return "F";
  }
  return "?";
}

Vec2 JointFrame::joint(JointId id) const {
  switch (id) {
    case JointId::B: return B;
    case JointId::A: return A;
    case JointId::D: return D;
    case JointId::F: return F;
  }
  throw DomainError("unknown joint id");
}

double body_displacement(const LinkageGeometry& geom, const StrokeConfig& cfg,
                         double theta) {
  return geom.d() * (std::sin(cfg.theta_ini / 2.0) - std::sin(theta / 2.0));
}

double theta_from_displacement(const LinkageGeometry& geom,
                               const StrokeConfig& cfg, double y) {
  double s = std::sin(cfg.theta_ini / 2.0) - y / geom.d();
  // Tolerate roundoff just past full extension; beyond that the chain cannot
  // reach the requested height.
  if (s > 1.0) {
    if (s > 1.0 + 1e-12) {
      throw DomainError("displacement " + std::to_string(y) +
                        " m lies above the extended position");
    }
    s = 1.0;
  }
  if (s < -1.0) {
    throw DomainError("displacement " + std::to_string(y) +
                      " m exceeds the full travel of the chain");
  }
  return 2.0 * std::asin(s);
}

JointFrame joint_frame(const LinkageGeometry& geom, double theta) {
  const double s = std::sin(theta / 2.0);
  const double c = std::cos(theta / 2.0);
  const double L = geom.link_length;
  JointFrame f;
  f.F = {0.0, 0.0};
  f.B = {0.0, 2.0 * L * s};
  f.A = {-L * c, L * s};
  f.D = {L * c, L * s};
  f.theta = theta;
  return f;
}

Vec2 attachment_point(const JointFrame& frame, LinkId link, double fraction) {
  if (!(fraction >= 0.0) || !(fraction <= 1.0)) {
    throw ConfigError("attachment fraction must lie in [0, 1], got " +
                      std::to_string(fraction));
  }
  Vec2 from, to;
  switch (link) {
    case LinkId::BA: from = frame.B; to = frame.A; break;
    case LinkId::BD: from = frame.B; to = frame.D; break;
    case LinkId::AF: from = frame.A; to = frame.F; break;
    case LinkId::FD: from = frame.F; to = frame.D; break;
    default: throw DomainError("unknown link id");
  }
  return from + (to - from) * fraction;
}

double joint_angle(const JointFrame& frame, JointId joint) {
  switch (joint) {
    case JointId::A:
    case JointId::D:
      return frame.theta;
    case JointId::B:
    case JointId::F:
      return kPi - frame.theta;
  }
  throw DomainError("unknown joint id");
}

}  // namespace springlink
