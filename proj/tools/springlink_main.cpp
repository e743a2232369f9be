// springlink: quasi-static force and energy analysis of a rhomboidal
// spring-linkage, with orientation sweeps, compositions, a finite-difference
// verification mode, and jump-height predictions for catalogued robots.

#include <fstream>
#include <iostream>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>

#include "springlink/energetics.hpp"
#include "springlink/oracle.hpp"
#include "springlink/output.hpp"
#include "springlink/robots.hpp"

using namespace springlink;

namespace {

SpringModel parse_model(const std::string& name) {
  if (name == "vertical") return SpringModel::Vertical;
  if (name == "horizontal") return SpringModel::Horizontal;
  if (name == "rotational") return SpringModel::Rotational;
  if (name == "a" || name == "model_a") return SpringModel::ModelA;
  if (name == "b" || name == "model_b") return SpringModel::ModelB;
  if (name == "c" || name == "model_c") return SpringModel::ModelC;
  throw ConfigError("unknown spring model '" + name +
                    "' (expected vertical, horizontal, rotational, a, b, or c)");
}

SpringSpec build_spec(const std::string& model_name, double gamma, double k,
                      double kr, int count) {
  const SpringModel model = parse_model(model_name);
  switch (model) {
    case SpringModel::Vertical: return SpringSpec::vertical(k, count);
    case SpringModel::Horizontal: return SpringSpec::horizontal(k, count);
    case SpringModel::Rotational: return SpringSpec::rotational(kr, count);
    default: break;
  }
  if (gamma < 0.0) {
    throw ConfigError("model '" + model_name + "' requires --gamma");
  }
  switch (model) {
    case SpringModel::ModelA: return SpringSpec::model_a(gamma, k, count);
    case SpringModel::ModelB: return SpringSpec::model_b(gamma, k, count);
    default: return SpringSpec::model_c(gamma, k, count);
  }
}

void write_output(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ConfigError("cannot open output file: " + path);
  out << text;
}

std::string component_label(const SpringSpec& spec) {
  std::string label = to_string(spec.model);
  if (spec.uses_gamma()) label += "_" + format_double(spec.gamma);
  return label;
}

// Common geometry/stroke/format options.
struct CommonOpts {
  double link_length = 0.15;
  double theta_ini_deg = 179.9;
  double theta_end_deg = 0.0;
  std::string format = "csv";
  std::string out;

  LinkageGeometry geometry() const {
    return LinkageGeometry::from_link_length(link_length);
  }
  StrokeConfig stroke() const {
    return StrokeConfig::make(deg_to_rad(theta_ini_deg),
                              deg_to_rad(theta_end_deg));
  }
  void add_to(CLI::App* sub) {
    sub->add_option("--link-length", link_length, "link length L in m")
        ->capture_default_str();
    sub->add_option("--theta-ini", theta_ini_deg,
                    "stroke start knee angle, deg")
        ->capture_default_str();
    sub->add_option("--theta-end", theta_end_deg, "stroke end knee angle, deg")
        ->capture_default_str();
    sub->add_option("--format", format, "output format: csv, json, or svg")
        ->capture_default_str();
    sub->add_option("--out", out, "output file (default stdout)");
  }
};

struct ForceCurveOpts {
  CommonOpts common;
  std::string model;
  double gamma = -1.0;
  double k = 0.0;
  double kr = 0.0;
  int count = 1;
  double f_max = 1.0;
  int points = 1000;
};

int run_force_curve(const ForceCurveOpts& o, bool k_given, bool kr_given) {
  const LinkageGeometry geom = o.common.geometry();
  const StrokeConfig cfg = o.common.stroke();
  SpringSpec spec = build_spec(o.model, o.gamma, k_given ? o.k : 1.0,
                               kr_given ? o.kr : 1.0, o.count);
  const StrokeConfig eff = effective_stroke(spec, cfg);
  const bool fixed_stiffness = k_given || kr_given;

  ChargingProfile prof;
  double per_spring_k;
  if (fixed_stiffness) {
    prof = integrate_profile(force_fn(spec, geom, eff), geom, eff, o.points, 1.0);
    prof.f_max = prof.peak_force();
    if (!(prof.f_max > 0.0)) {
      throw UnsolvableError("charging force never becomes positive; "
                            "no peak to normalize against");
    }
    per_spring_k = spec.stiffness;
  } else {
    // solve_stiffness returns the effective (count-folded) stiffness.
    const StiffnessSolution sol = solve_stiffness(spec, geom, cfg, o.f_max);
    SpringSpec solved = spec;
    solved.stiffness = sol.stiffness;
    solved.count = 1;
    prof = integrate_profile(force_fn(solved, geom, eff), geom, eff, o.points,
                             o.f_max);
    per_spring_k = sol.stiffness / o.count;
  }

  RunStamp stamp{"force-curve", {}};
  stamp.params.emplace_back("model", to_string(spec.model));
  if (spec.uses_gamma()) stamp.params.emplace_back("gamma", format_double(spec.gamma));
  stamp.params.emplace_back(spec.is_rotational() ? "kr" : "k",
                            format_double(per_spring_k));
  stamp.params.emplace_back("count", std::to_string(o.count));
  stamp.params.emplace_back("stiffness_solved", fixed_stiffness ? "no" : "yes");
  stamp.params.emplace_back("f_max", format_double(prof.f_max));
  stamp.params.emplace_back("link_length", format_double(geom.link_length));
  stamp.params.emplace_back("theta_ini_deg", format_double(rad_to_deg(eff.theta_ini)));
  stamp.params.emplace_back("theta_end_deg", format_double(rad_to_deg(eff.theta_end)));
  stamp.params.emplace_back("points", std::to_string(o.points));

  switch (parse_format(o.common.format)) {
    case OutputFormat::Csv: write_output(profile_to_csv(prof, stamp), o.common.out); break;
    case OutputFormat::Json: write_output(profile_to_json(prof, stamp), o.common.out); break;
    case OutputFormat::Svg: write_output(profile_to_svg(prof, stamp), o.common.out); break;
  }
  return 0;
}

struct SweepOpts {
  CommonOpts common;
  std::string model;
  double f_max = 1.0;
  int gammas = 101;
  int points = 1000;
};

int run_sweep(const SweepOpts& o) {
  const SpringModel model = parse_model(o.model);
  const SweepResult res = sweep_orientation(model, o.common.geometry(),
                                            o.common.stroke(), o.f_max,
                                            o.gammas, o.points);
  RunStamp stamp{"sweep", {}};
  stamp.params.emplace_back("model", to_string(model));
  stamp.params.emplace_back("gammas", std::to_string(o.gammas));
  stamp.params.emplace_back("f_max", format_double(o.f_max));
  stamp.params.emplace_back("link_length", format_double(o.common.link_length));
  stamp.params.emplace_back("theta_ini_deg", format_double(o.common.theta_ini_deg));
  stamp.params.emplace_back("theta_end_deg", format_double(o.common.theta_end_deg));
  stamp.params.emplace_back("points", std::to_string(o.points));

  switch (parse_format(o.common.format)) {
    case OutputFormat::Csv: write_output(sweep_to_csv(res, stamp), o.common.out); break;
    case OutputFormat::Json: write_output(sweep_to_json(res, stamp), o.common.out); break;
    case OutputFormat::Svg: write_output(sweep_to_svg(res, stamp), o.common.out); break;
  }
  return 0;
}

struct ComposeOpts {
  CommonOpts common;
  std::vector<std::string> models;
  std::vector<double> gammas;
  std::vector<double> ks;
  double f_max = 1.0;
  int points = 1000;
  bool optimize = false;
};

int run_compose(const ComposeOpts& o) {
  if (o.models.size() < 2) {
    throw ConfigError("compose needs at least two --model entries");
  }
  if (!o.gammas.empty() && o.gammas.size() != o.models.size()) {
    throw ConfigError("--gamma list must match the --model list length");
  }
  if (!o.ks.empty() && o.ks.size() != o.models.size()) {
    throw ConfigError("--k list must match the --model list length");
  }
  const LinkageGeometry geom = o.common.geometry();
  const StrokeConfig cfg = o.common.stroke();

  CompositeSpring comp;
  for (size_t i = 0; i < o.models.size(); ++i) {
    const double g = o.gammas.empty() ? -1.0 : o.gammas[i];
    const double k = o.ks.empty() ? 1.0 : o.ks[i];
    comp.components.push_back(build_spec(o.models[i], g, k, k, 1));
  }

  StrokeConfig eff = cfg;
  for (const auto& spec : comp.components) {
    eff = effective_stroke(spec, eff);
  }

  RunStamp stamp{"compose", {}};
  for (const auto& spec : comp.components) {
    stamp.params.emplace_back("component", component_label(spec));
  }

  if (o.optimize) {
    if (comp.components.size() != 2) {
      throw ConfigError("--optimize supports exactly two components");
    }
    MixOptimum m = optimize_pair_mix(comp.components[0], comp.components[1],
                                     geom, cfg, o.f_max, o.points);
    comp.components[0].stiffness = m.stiffness_first;
    comp.components[1].stiffness = m.stiffness_second;
    stamp.params.emplace_back("mix", format_double(m.mix));
  }
  for (const auto& spec : comp.components) {
    stamp.params.emplace_back(spec.is_rotational() ? "kr" : "k",
                              format_double(spec.stiffness));
  }

  const ForceFn total = superpose(comp, geom, eff);
  CompositionReport rep;
  rep.total = integrate_profile(total, geom, eff, o.points, 1.0);
  rep.total.f_max = rep.total.peak_force();
  if (!(rep.total.f_max > 0.0)) {
    throw UnsolvableError("composite charging force never becomes positive");
  }
  for (const auto& spec : comp.components) {
    std::vector<double> col;
    col.reserve(rep.total.samples.size());
    for (const auto& s : rep.total.samples) {
      col.push_back(charging_force(spec, geom, eff, s.theta));
    }
    rep.component_forces.push_back(std::move(col));
    std::string label = component_label(spec);
    for (const auto& existing : rep.component_names) {
      if (existing == label) {
        label += "_" + std::to_string(rep.component_names.size());
        break;
      }
    }
    rep.component_names.push_back(label);
  }
  rep.cv = composition_cv(total, geom, eff, o.points);
  rep.normalized_energy = rep.total.final_epe() / (rep.total.f_max * geom.d());

  stamp.params.emplace_back("link_length", format_double(geom.link_length));
  stamp.params.emplace_back("theta_ini_deg", format_double(rad_to_deg(eff.theta_ini)));
  stamp.params.emplace_back("theta_end_deg", format_double(rad_to_deg(eff.theta_end)));
  stamp.params.emplace_back("points", std::to_string(o.points));

  switch (parse_format(o.common.format)) {
    case OutputFormat::Csv: write_output(composition_to_csv(rep, stamp), o.common.out); break;
    case OutputFormat::Json: write_output(composition_to_json(rep, stamp), o.common.out); break;
    case OutputFormat::Svg: write_output(composition_to_svg(rep, stamp), o.common.out); break;
  }
  return 0;
}

struct VerifyOpts {
  CommonOpts common;
  std::string model;
  double gamma = -1.0;
  double k = 1.0;
  double kr = 1.0;
  int points = 101;
  double tolerance = 1e-6;
};

int run_verify(const VerifyOpts& o) {
  const SpringSpec spec = build_spec(o.model, o.gamma, o.k, o.kr, 1);
  const VerifyReport rep = run_verification(spec, o.common.geometry(),
                                            o.common.stroke(), o.points,
                                            o.tolerance);
  RunStamp stamp{"verify", {}};
  stamp.params.emplace_back("model", to_string(spec.model));
  if (spec.uses_gamma()) stamp.params.emplace_back("gamma", format_double(spec.gamma));
  stamp.params.emplace_back("points", std::to_string(o.points));
  stamp.params.emplace_back("tolerance", format_double(o.tolerance));
  stamp.params.emplace_back("link_length", format_double(o.common.link_length));
  stamp.params.emplace_back("theta_ini_deg", format_double(o.common.theta_ini_deg));
  stamp.params.emplace_back("theta_end_deg", format_double(o.common.theta_end_deg));

  switch (parse_format(o.common.format)) {
    case OutputFormat::Csv: write_output(verify_to_csv(rep, stamp), o.common.out); break;
    case OutputFormat::Json: write_output(verify_to_json(rep, stamp), o.common.out); break;
    case OutputFormat::Svg:
      throw ConfigError("verify reports support csv and json only");
  }
  if (!rep.passed) {
    std::cerr << "verification failed: max relative error "
              << format_double(rep.max_rel_err) << " exceeds tolerance "
              << format_double(rep.tolerance) << "\n";
    return 4;
  }
  return 0;
}

struct PredictOpts {
  std::string catalogue = "data/robots.csv";
  double g = kStandardGravity;
  std::string format = "csv";
  std::string out;
};

int run_predict(const PredictOpts& o) {
  const auto recs = load_catalogue_file(o.catalogue);
  const auto preds = predict_improvements(recs, o.g);
  RunStamp stamp{"predict", {}};
  stamp.params.emplace_back("catalogue", o.catalogue);
  stamp.params.emplace_back("g", format_double(o.g));
  switch (parse_format(o.format)) {
    case OutputFormat::Csv: write_output(predictions_to_csv(preds, stamp), o.out); break;
    case OutputFormat::Json: write_output(predictions_to_json(preds, stamp), o.out); break;
    case OutputFormat::Svg:
      throw ConfigError("predict reports support csv and json only");
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"quasi-static spring-linkage force and energy analysis"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "springlink 1.0.0");

  ForceCurveOpts fc;
  CLI::App* fc_cmd = app.add_subcommand(
      "force-curve", "charging force and stored energy over the stroke");
  fc_cmd->add_option("--model", fc.model,
                     "spring model: vertical, horizontal, rotational, a, b, c")
      ->required();
  fc_cmd->add_option("--gamma", fc.gamma, "position ratio for models a/b/c");
  CLI::Option* fc_k = fc_cmd->add_option("--k", fc.k, "translational stiffness N/m");
  CLI::Option* fc_kr = fc_cmd->add_option("--kr", fc.kr, "torsion stiffness N*m/rad");
  fc_cmd->add_option("--count", fc.count, "identical springs in parallel")
      ->capture_default_str();
  fc_cmd->add_option("--fmax", fc.f_max,
                     "target peak force when no stiffness is given")
      ->capture_default_str();
  fc_cmd->add_option("--points", fc.points, "number of profile samples")
      ->capture_default_str();
  fc.common.add_to(fc_cmd);

  SweepOpts sw;
  CLI::App* sw_cmd = app.add_subcommand(
      "sweep", "normalized energy and stiffness across position ratios");
  sw_cmd->add_option("--model", sw.model, "positioned model: a, b, or c")
      ->required();
  sw_cmd->add_option("--gammas", sw.gammas, "number of ratio samples")
      ->capture_default_str();
  sw_cmd->add_option("--fmax", sw.f_max, "target peak force")
      ->capture_default_str();
  sw_cmd->add_option("--points", sw.points, "profile samples per ratio")
      ->capture_default_str();
  sw.common.add_to(sw_cmd);

  ComposeOpts co;
  CLI::App* co_cmd = app.add_subcommand(
      "compose", "superpose several springs into one charging profile");
  co_cmd->add_option("--model", co.models, "comma-separated component models")
      ->required()
      ->delimiter(',');
  co_cmd->add_option("--gamma", co.gammas,
                     "comma-separated ratios, aligned with --model")
      ->delimiter(',');
  co_cmd->add_option("--k", co.ks,
                     "comma-separated stiffnesses, aligned with --model")
      ->delimiter(',');
  co_cmd->add_flag("--optimize", co.optimize,
                   "golden-section the stiffness mix of two components");
  co_cmd->add_option("--fmax", co.f_max, "target peak force for --optimize")
      ->capture_default_str();
  co_cmd->add_option("--points", co.points, "number of profile samples")
      ->capture_default_str();
  co.common.add_to(co_cmd);

  VerifyOpts ve;
  CLI::App* ve_cmd = app.add_subcommand(
      "verify", "closed-form forces against the finite-difference oracle");
  ve_cmd->add_option("--model", ve.model, "spring model")->required();
  ve_cmd->add_option("--gamma", ve.gamma, "position ratio for models a/b/c");
  ve_cmd->add_option("--k", ve.k, "translational stiffness N/m")
      ->capture_default_str();
  ve_cmd->add_option("--kr", ve.kr, "torsion stiffness N*m/rad")
      ->capture_default_str();
  ve_cmd->add_option("--points", ve.points, "midpoint samples")
      ->capture_default_str();
  ve_cmd->add_option("--tolerance", ve.tolerance, "relative error bound")
      ->capture_default_str();
  ve.common.add_to(ve_cmd);

  PredictOpts pr;
  CLI::App* pr_cmd = app.add_subcommand(
      "predict", "jump-height predictions from the robot catalogue");
  pr_cmd->add_option("--catalogue", pr.catalogue, "robot catalogue CSV")
      ->capture_default_str();
  pr_cmd->add_option("--g", pr.g, "gravitational acceleration m/s^2")
      ->capture_default_str();
  pr_cmd->add_option("--format", pr.format, "output format: csv or json")
      ->capture_default_str();
  pr_cmd->add_option("--out", pr.out, "output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (fc_cmd->parsed()) {
      return run_force_curve(fc, fc_k->count() > 0, fc_kr->count() > 0);
    }
    if (sw_cmd->parsed()) return run_sweep(sw);
    if (co_cmd->parsed()) return run_compose(co);
    if (ve_cmd->parsed()) return run_verify(ve);
    if (pr_cmd->parsed()) return run_predict(pr);
  } catch (const SingularityError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
