#pragma once

#include <numbers>

#include "springlink/errors.hpp"

namespace springlink {

inline constexpr double kPi = std::numbers::pi;

constexpr double deg_to_rad(double deg) { return deg * kPi / 180.0; }
constexpr double rad_to_deg(double rad) { return rad * 180.0 / kPi; }

struct Vec2 {
  double x = 0.0;
  double y = 0.0;

  Vec2 operator+(Vec2 o) const { return {x + o.x, y + o.y}; }
  Vec2 operator-(Vec2 o) const { return {x - o.x, y - o.y}; }
  Vec2 operator*(double s) const { return {x * s, y * s}; }
};

double norm(Vec2 v);
double dot(Vec2 a, Vec2 b);
double cross(Vec2 a, Vec2 b);

// Symmetric closed chain of four equal links: body joint B on top, knees A
// (left) and D (right), foot F at the origin. The knee angle theta is the
// interior angle at A and D; theta = pi is fully extended, theta = 0 fully
// depressed. Characteristic length d = 2 * link_length.
struct LinkageGeometry {
  double link_length = 0.15;

  double d() const { return 2.0 * link_length; }

  static LinkageGeometry from_link_length(double link_length);
};

// Charging stroke: the knee angle runs from theta_ini down to theta_end.
struct StrokeConfig {
  double theta_ini = 0.0;  // rad, in (0, pi]
  double theta_end = 0.0;  // rad, in [0, theta_ini)

  static StrokeConfig make(double theta_ini, double theta_end);

  bool contains(double theta) const {
    return theta >= theta_end && theta <= theta_ini;
  }
};

enum class LinkId { BA, BD, AF, FD };
enum class JointId { B, A, D, F };

const char* to_string(LinkId id);
const char* to_string(JointId id);

// Joint positions at a given knee angle. F at the origin, B on the +y axis.
struct JointFrame {
  Vec2 B, A, D, F;
  double theta = 0.0;

  Vec2 joint(JointId id) const;
};

// Downward travel of the body joint from the stroke start:
// y = d * (sin(theta_ini/2) - sin(theta/2)).
double body_displacement(const LinkageGeometry& geom, const StrokeConfig& cfg,
                         double theta);

// Inverse of body_displacement; accepts any y that keeps theta within [0, pi],
// including slightly beyond the stroke (used by finite-difference probes).
double theta_from_displacement(const LinkageGeometry& geom,
                               const StrokeConfig& cfg, double y);

JointFrame joint_frame(const LinkageGeometry& geom, double theta);

// Point on a link at `fraction` of the way from the link's first-named joint
// to its second (BA: from B toward A, and so on).
Vec2 attachment_point(const JointFrame& frame, LinkId link, double fraction);

// Interior angle of the chain at a joint: theta at the knees A and D,
// pi - theta at B and F.
double joint_angle(const JointFrame& frame, JointId joint);

}  // namespace springlink
