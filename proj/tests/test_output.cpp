#include <cstdlib>
#include <string>
#include <vector>

#include <doctest.h>

#include "springlink/energetics.hpp"
#include "springlink/output.hpp"

using namespace springlink;

namespace {

const LinkageGeometry kGeom{0.15};
const StrokeConfig kStroke = StrokeConfig::make(deg_to_rad(179.9), 0.0);

ChargingProfile small_profile() {
  return solved_profile(SpringSpec::vertical(1.0), kGeom, kStroke, 1.0, 16);
}

int count_lines(const std::string& s) {
  int n = 0;
  for (char c : s) n += (c == '\n');
  return n;
}

}  // namespace

TEST_CASE("doubles print losslessly") {
  for (double v : {kPi, 0.1, -3.0e-17, 1234.5678, 0.0,
                   0.499999809614125, 2.0899894683990516}) {
    const std::string s = format_double(v);
    CHECK(std::strtod(s.c_str(), nullptr) == v);
  }
}

TEST_CASE("format names parse") {
  CHECK(parse_format("csv") == OutputFormat::Csv);
  CHECK(parse_format("json") == OutputFormat::Json);
  CHECK(parse_format("svg") == OutputFormat::Svg);
  CHECK_THROWS_AS(parse_format("yaml"), ConfigError);
}

TEST_CASE("profile CSV carries the stamp, the header, and one row per sample") {
  ChargingProfile p = small_profile();
  RunStamp stamp{"force-curve", {{"model", "vertical"}, {"points", "16"}}};
  const std::string csv = profile_to_csv(p, stamp);
  CHECK(csv.rfind("# springlink force-curve\n", 0) == 0);
  CHECK(csv.find("# model: vertical\n") != std::string::npos);
  CHECK(csv.find("theta_deg,y_m,y_over_d,F_c_n,F_over_Fmax,EPE_j,"
                 "EPE_over_Fmax_d\n") != std::string::npos);
  // 3 stamp lines + header + 16 rows
  CHECK(count_lines(csv) == 3 + 1 + 16);
  CHECK(csv.back() == '\n');
  CHECK(csv.find('\r') == std::string::npos);
}

TEST_CASE("profile JSON round-trips bitwise") {
  ChargingProfile p = small_profile();
  RunStamp stamp{"force-curve", {{"model", "vertical"}}};
  ChargingProfile q = profile_from_json(profile_to_json(p, stamp));
  CHECK(q.f_max == p.f_max);
  CHECK(q.d == p.d);
  REQUIRE(q.samples.size() == p.samples.size());
  for (size_t i = 0; i < p.samples.size(); ++i) {
    CHECK(q.samples[i].theta == p.samples[i].theta);
    CHECK(q.samples[i].y == p.samples[i].y);
    CHECK(q.samples[i].force == p.samples[i].force);
    CHECK(q.samples[i].epe == p.samples[i].epe);
  }
  CHECK_THROWS_AS(profile_from_json("not json"), ParseError);
  CHECK_THROWS_AS(profile_from_json("{\"d\": 1}"), ParseError);
}

TEST_CASE("profile SVG is a minimal line chart") {
  ChargingProfile p = small_profile();
  RunStamp stamp{"force-curve", {}};
  const std::string svg = profile_to_svg(p, stamp);
  CHECK(svg.rfind("<svg", 0) == 0);
  CHECK(svg.find("</svg>") != std::string::npos);
  CHECK(svg.find("<polyline") != std::string::npos);
  CHECK(svg.find("F / F_max") != std::string::npos);
}

TEST_CASE("sweep emitters keep unsolvable gaps visible") {
  SweepResult s = sweep_orientation(SpringModel::ModelB, kGeom, kStroke, 1.0,
                                    5, 200);
  RunStamp stamp{"sweep", {{"model", "model_b"}}};
  const std::string csv = sweep_to_csv(s, stamp);
  CHECK(csv.find("gamma,solvable,normalized_energy,normalized_stiffness,note\n") !=
        std::string::npos);
  CHECK(csv.find("0,0,,,degenerate") != std::string::npos);
  const std::string json = sweep_to_json(s, stamp);
  CHECK(json.find("\"solvable\": false") != std::string::npos);
  CHECK(json.find("\"normalized_energy\": null") != std::string::npos);
  const std::string svg = sweep_to_svg(s, stamp);
  CHECK(svg.find("<polyline") != std::string::npos);
}

TEST_CASE("composition emitters include per-component forces and the summary") {
  CompositeSpring comp{{SpringSpec::vertical(1.0), SpringSpec::horizontal(1.0)}};
  ForceFn f = superpose(comp, kGeom, kStroke);
  CompositionReport rep;
  rep.total = integrate_profile(f, kGeom, kStroke, 8, 1.0);
  rep.total.f_max = rep.total.peak_force();
  rep.component_names = {"vertical", "horizontal"};
  for (const auto& spec : comp.components) {
    std::vector<double> col;
    for (const auto& s : rep.total.samples) {
      col.push_back(charging_force(spec, kGeom, kStroke, s.theta));
    }
    rep.component_forces.push_back(col);
  }
  rep.cv = composition_cv(f, kGeom, kStroke);
  rep.normalized_energy =
      rep.total.final_epe() / (rep.total.f_max * rep.total.d);

  RunStamp stamp{"compose", {}};
  const std::string csv = composition_to_csv(rep, stamp);
  CHECK(csv.find("F_vertical_n") != std::string::npos);
  CHECK(csv.find("F_horizontal_n") != std::string::npos);
  CHECK(csv.find("# force_cv: ") != std::string::npos);
  const std::string json = composition_to_json(rep, stamp);
  CHECK(json.find("\"component_forces\"") != std::string::npos);
  const std::string svg = composition_to_svg(rep, stamp);
  CHECK(svg.find("<polyline") != std::string::npos);
}

TEST_CASE("verification emitters carry branch columns when present") {
  VerifyReport plain = run_verification(SpringSpec::vertical(200.0), kGeom,
                                        kStroke, 7);
  RunStamp stamp{"verify", {}};
  const std::string csv = verify_to_csv(plain, stamp);
  CHECK(csv.find("theta_deg,f_closed_n,f_oracle_n,rel_err\n") !=
        std::string::npos);
  CHECK(csv.find("# passed: yes") != std::string::npos);

  VerifyReport branchy = run_verification(SpringSpec::model_a(1.0, 200.0),
                                          kGeom, kStroke, 7);
  const std::string bcsv = verify_to_csv(branchy, stamp);
  CHECK(bcsv.find("f_phi_geometric_n,f_phi_principal_n") != std::string::npos);
  CHECK(bcsv.find("# phi_branches: ") != std::string::npos);
  const std::string bjson = verify_to_json(branchy, stamp);
  CHECK(bjson.find("\"branch_rows\"") != std::string::npos);
  CHECK(bjson.find("\"gamma\": 1.0") != std::string::npos);
}

TEST_CASE("prediction emitters handle missing values") {
  JumpPrediction full;
  full.name = "full";
  full.force_to_weight = 10.0;
  full.improvement = 0.5625;
  JumpPrediction sparse;
  sparse.name = "sparse, with comma";
  sparse.note = "insufficient data";
  std::vector<JumpPrediction> preds = {full, sparse};
  RunStamp stamp{"predict", {}};
  const std::string csv = predictions_to_csv(preds, stamp);
  CHECK(csv.find("full,10,") != std::string::npos);
  CHECK(csv.find("\"sparse, with comma\"") != std::string::npos);
  const std::string json = predictions_to_json(preds, stamp);
  CHECK(json.find("\"improvement\": null") != std::string::npos);
  CHECK(json.find("\"improvement\": 0.5625") != std::string::npos);
}
