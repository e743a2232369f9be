#pragma once

#include <string>
#include <vector>

#include "springlink/spring_models.hpp"

namespace springlink {

struct SpringEndpoint {
  LinkId link = LinkId::BA;
  double fraction = 0.0;  // from the link's first-named joint, in [0, 1]
};

// A physical spring realized on the linkage by explicit attachment geometry,
// independent of the closed-form force expressions. Natural length/angle is
// taken at the stroke start.
struct SpringInstance {
  enum class Kind { Translational, Rotational };

  Kind kind = Kind::Translational;
  SpringEndpoint end_a, end_b;       // translational
  JointId joint = JointId::A;        // rotational
  double stiffness = 1.0;            // N/m or N*m/rad
  double natural = 0.0;              // length (m) or joint angle (rad) at theta_ini

  static SpringInstance translational(const LinkageGeometry& geom,
                                      const StrokeConfig& cfg, SpringEndpoint a,
                                      SpringEndpoint b, double k);
  static SpringInstance rotational(const LinkageGeometry& geom,
                                   const StrokeConfig& cfg, JointId joint,
                                   double k_r);
  // Canonical attachment realizing a SpringSpec (count folded into stiffness).
  static SpringInstance from_spec(const SpringSpec& spec,
                                  const LinkageGeometry& geom,
                                  const StrokeConfig& cfg);

  double current_value(const LinkageGeometry& geom, double theta) const;
  double energy(const LinkageGeometry& geom, double theta) const;
};

// Total stored elastic energy of a set of springs at a knee angle.
double potential_energy(const LinkageGeometry& geom,
                        const std::vector<SpringInstance>& springs, double theta);

// Charging force dU/dy by central difference on the body displacement.
// Step defaults to d * 1e-6. `oracle_force` adds one Richardson
// extrapolation level; the plain variant is the raw second-order stencil.
double oracle_force_plain(const LinkageGeometry& geom, const StrokeConfig& cfg,
                          const std::vector<SpringInstance>& springs,
                          double theta, double step = -1.0);
double oracle_force(const LinkageGeometry& geom, const StrokeConfig& cfg,
                    const std::vector<SpringInstance>& springs, double theta,
                    double step = -1.0);

// Closed form vs oracle comparison over a grid of interior angles.
struct VerifyRow {
  double theta = 0.0;
  double f_closed = 0.0;
  double f_oracle = 0.0;
  double rel_err = 0.0;
};

// Extra columns emitted for ModelA: both phi branches against the oracle.
struct BranchRow {
  double theta = 0.0;
  double f_geometric = 0.0;
  double f_principal = 0.0;
  double f_oracle = 0.0;
};

struct VerifyReport {
  SpringSpec spec;
  double step = 0.0;
  double tolerance = 0.0;
  std::vector<VerifyRow> rows;
  double max_rel_err = 0.0;
  bool passed = false;
  // ModelA only: branch comparison for the obtuse-phi question. When the
  // branches disagree, `branch_note` summarizes which one tracks the oracle.
  std::vector<BranchRow> branch_rows;
  std::string branch_note;
  double max_rel_err_geometric = 0.0;
  double max_rel_err_principal = 0.0;
};

// Compares the closed-form charging force of `spec` against the virtual-work
// oracle on `n_points` midpoint angles inside the stroke. For ModelA the
// report carries both phi-branch evaluations; `passed` is judged on the
// geometric branch.
VerifyReport run_verification(const SpringSpec& spec, const LinkageGeometry& geom,
                              const StrokeConfig& cfg, int n_points = 101,
                              double tolerance = 1e-6);

}  // namespace springlink
