#pragma once

#include "springlink/geometry.hpp"

namespace springlink {

// Spring families supported on the linkage. Vertical acts along B-F,
// Horizontal along A-D, Rotational at a knee. ModelA/B/C are springs
// connecting two links at a position ratio gamma:
//   ModelA: BA and FD, attachment at gamma from B and from F;
//   ModelB: BA and DB, attachment at gamma from B and from D;
//   ModelC: BA and AF, attachment at gamma from B and from A.
enum class SpringModel { Vertical, Horizontal, Rotational, ModelA, ModelB, ModelC };

const char* to_string(SpringModel m);

struct SpringSpec {
  SpringModel model = SpringModel::Vertical;
  double gamma = 0.0;      // position ratio, ModelA/B/C only
  double stiffness = 1.0;  // N/m, or N*m/rad for Rotational
  int count = 1;           // identical springs in parallel

  // n identical springs fold into one of stiffness n*k.
  double effective_stiffness() const { return count * stiffness; }

  bool is_rotational() const { return model == SpringModel::Rotational; }
  bool uses_gamma() const;
  // True when the spring cannot deflect at all (ModelA gamma=0.5,
  // ModelB/C gamma in {0,1}): charging force is identically zero.
  bool is_degenerate() const;
  // True when the charging force is undefined at theta = pi and the
  // profile start must be clamped below it.
  bool singular_at_upright() const;

  SpringSpec with_stiffness(double k) const;

  static SpringSpec vertical(double k, int count = 1);
  static SpringSpec horizontal(double k, int count = 1);
  static SpringSpec rotational(double k_r, int count = 1);
  static SpringSpec model_a(double gamma, double k, int count = 1);
  static SpringSpec model_b(double gamma, double k, int count = 1);
  static SpringSpec model_c(double gamma, double k, int count = 1);
};

// Current length of the connecting spring for the positioned models.
double spring_length_model_a(const LinkageGeometry& geom, double gamma, double theta);
double spring_length_model_b(const LinkageGeometry& geom, double gamma, double theta);
double spring_length_model_c(const LinkageGeometry& geom, double gamma, double theta);

// Quasi-static charging forces. All take theta within the stroke and return
// the vertical force at the body joint that balances the spring. Stiffness
// arguments are the effective (already folded) values.
double charging_force_vertical(const LinkageGeometry& geom, const StrokeConfig& cfg,
                               double k, double theta);
double charging_force_horizontal(const LinkageGeometry& geom, const StrokeConfig& cfg,
                                 double k, double theta);
double charging_force_rotational(const LinkageGeometry& geom, const StrokeConfig& cfg,
                                 double k_r, double theta);
double charging_force_model_a(const LinkageGeometry& geom, const StrokeConfig& cfg,
                              double gamma, double k, double theta);
double charging_force_model_b(const LinkageGeometry& geom, const StrokeConfig& cfg,
                              double gamma, double k, double theta);
double charging_force_model_c(const LinkageGeometry& geom, const StrokeConfig& cfg,
                              double gamma, double k, double theta);

// Dispatch on a SpringSpec, folding count into the stiffness.
double charging_force(const SpringSpec& spec, const LinkageGeometry& geom,
                      const StrokeConfig& cfg, double theta);

// The ModelA force written as its moment-balance bracket with the angle phi
// between the spring and link BA made explicit. Geometric resolves phi from
// the attachment coordinates (can be obtuse); PrincipalAsin forces the
// principal inverse-sine branch. The two disagree for gamma > sin^2(theta/2);
// verification reports compare both against the virtual-work oracle.
enum class PhiBranch { Geometric, PrincipalAsin };
double charging_force_model_a_phi(const LinkageGeometry& geom, const StrokeConfig& cfg,
                                  double gamma, double k, double theta,
                                  PhiBranch branch);

// Instantaneous state of the spring at a knee angle.
struct SpringState {
  double length = 0.0;      // current spring length L_c, m (0 for rotational)
  double deflection = 0.0;  // natural - current; negative = spring extended
  double phi = 0.0;         // angle between spring and its reference link, rad
  double force = 0.0;       // charging force F_c, N
  bool extended = false;    // true when longer (or wound wider) than natural
};

SpringState spring_state(const SpringSpec& spec, const LinkageGeometry& geom,
                         const StrokeConfig& cfg, double theta);

// Knee angle at which the horizontal spring's charging force peaks:
// theta = 2*acos(cbrt(cos(theta_ini/2))).
double peak_force_angle_horizontal(double theta_ini);

// Stored elastic energy at the end of a full charge, with stiffness implied
// by reaching f_max within the stroke (the stiffness-solver contract).
double epe_vertical(const StrokeConfig& cfg, double f_max, double d, double theta_end);
double epe_horizontal(const StrokeConfig& cfg, double f_max, double d, double theta_end);
double epe_rotational(const StrokeConfig& cfg, double f_max, double d);

}  // namespace springlink
