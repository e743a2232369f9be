#include "springlink/output.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

namespace springlink {

using ordered_json = nlohmann::ordered_json;

OutputFormat parse_format(const std::string& name) {
  if (name == "csv") return OutputFormat::Csv;
  if (name == "json") return OutputFormat::Json;
  if (name == "svg") return OutputFormat::Svg;
  throw ConfigError("unknown output format '" + name +
                    "' (expected csv, json, or svg)");
}

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

namespace {

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += "\"\"";
    else out += c;
  }
  out += '"';
  return out;
}

void append_stamp_csv(std::ostringstream& out, const RunStamp& stamp) {
  out << "# springlink " << stamp.command << "\n";
  for (const auto& [key, value] : stamp.params) {
    out << "# " << key << ": " << value << "\n";
  }
}

ordered_json stamp_json(const RunStamp& stamp) {
  ordered_json j;
  j["command"] = stamp.command;
  ordered_json p = ordered_json::object();
  for (const auto& [key, value] : stamp.params) p[key] = value;
  j["params"] = p;
  return j;
}

std::string opt_csv(const std::optional<double>& v) {
  return v ? format_double(*v) : std::string();
}

ordered_json opt_json(const std::optional<double>& v) {
  if (v) return *v;
  return nullptr;
}

// Minimal line chart: one or more polylines in a fixed 640x480 viewport with
// framed axes and five ticks per side.
struct Series {
  std::vector<std::pair<double, double>> pts;
  const char* color = "#1f6fb2";
};

std::string tick_label(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.4g", v);
  return buf;
}

std::string svg_chart(const RunStamp& stamp, const std::string& x_label,
                      const std::string& y_label,
                      const std::vector<Series>& series) {
  const double w = 640, h = 480;
  const double ml = 70, mr = 20, mt = 20, mb = 50;
  double xmin = 0, xmax = 1, ymin = 0, ymax = 1;
  bool first = true;
  for (const auto& s : series) {
    for (const auto& [x, y] : s.pts) {
      if (first) {
        xmin = xmax = x;
        ymin = ymax = y;
        first = false;
      } else {
        xmin = std::min(xmin, x);
        xmax = std::max(xmax, x);
        ymin = std::min(ymin, y);
        ymax = std::max(ymax, y);
      }
    }
  }
  if (xmax == xmin) xmax = xmin + 1;
  if (ymax == ymin) ymax = ymin + 1;
  const auto sx = [&](double x) {
    return ml + (x - xmin) / (xmax - xmin) * (w - ml - mr);
  };
  const auto sy = [&](double y) {
    return h - mb - (y - ymin) / (ymax - ymin) * (h - mt - mb);
  };

  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w
      << "\" height=\"" << h << "\" viewBox=\"0 0 " << w << " " << h << "\">\n";
  out << "<!-- springlink " << stamp.command;
  for (const auto& [key, value] : stamp.params) out << " " << key << "=" << value;
  out << " -->\n";
  out << "<rect width=\"" << w << "\" height=\"" << h << "\" fill=\"white\"/>\n";
  // axes
  out << "<line x1=\"" << ml << "\" y1=\"" << h - mb << "\" x2=\"" << w - mr
      << "\" y2=\"" << h - mb << "\" stroke=\"black\"/>\n";
  out << "<line x1=\"" << ml << "\" y1=\"" << mt << "\" x2=\"" << ml
      << "\" y2=\"" << h - mb << "\" stroke=\"black\"/>\n";
  for (int i = 0; i <= 4; ++i) {
    const double fx = xmin + (xmax - xmin) * i / 4.0;
    const double fy = ymin + (ymax - ymin) * i / 4.0;
    const double px = sx(fx), py = sy(fy);
    out << "<line x1=\"" << px << "\" y1=\"" << h - mb << "\" x2=\"" << px
        << "\" y2=\"" << h - mb + 5 << "\" stroke=\"black\"/>\n";
    out << "<text x=\"" << px << "\" y=\"" << h - mb + 18
        << "\" font-size=\"11\" text-anchor=\"middle\">" << tick_label(fx)
        << "</text>\n";
    out << "<line x1=\"" << ml - 5 << "\" y1=\"" << py << "\" x2=\"" << ml
        << "\" y2=\"" << py << "\" stroke=\"black\"/>\n";
    out << "<text x=\"" << ml - 8 << "\" y=\"" << py + 4
        << "\" font-size=\"11\" text-anchor=\"end\">" << tick_label(fy)
        << "</text>\n";
  }
  out << "<text x=\"" << (ml + w - mr) / 2 << "\" y=\"" << h - 12
      << "\" font-size=\"13\" text-anchor=\"middle\">" << x_label
      << "</text>\n";
  out << "<text x=\"16\" y=\"" << (mt + h - mb) / 2
      << "\" font-size=\"13\" text-anchor=\"middle\" transform=\"rotate(-90 16 "
      << (mt + h - mb) / 2 << ")\">" << y_label << "</text>\n";
  for (const auto& s : series) {
    if (s.pts.empty()) continue;
    out << "<polyline fill=\"none\" stroke=\"" << s.color
        << "\" stroke-width=\"1.5\" points=\"";
    for (const auto& [x, y] : s.pts) out << sx(x) << "," << sy(y) << " ";
    out << "\"/>\n";
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace

std::string profile_to_csv(const ChargingProfile& p, const RunStamp& stamp) {
  std::ostringstream out;
  append_stamp_csv(out, stamp);
  out << "theta_deg,y_m,y_over_d,F_c_n,F_over_Fmax,EPE_j,EPE_over_Fmax_d\n";
  for (const auto& s : p.samples) {
    out << format_double(rad_to_deg(s.theta)) << ',' << format_double(s.y)
        << ',' << format_double(s.y / p.d) << ',' << format_double(s.force)
        << ',' << format_double(s.force / p.f_max) << ','
        << format_double(s.epe) << ','
        << format_double(s.epe / (p.f_max * p.d)) << "\n";
  }
  return out.str();
}

std::string profile_to_json(const ChargingProfile& p, const RunStamp& stamp) {
  ordered_json j = stamp_json(stamp);
  j["f_max"] = p.f_max;
  j["d"] = p.d;
  ordered_json samples = ordered_json::array();
  for (const auto& s : p.samples) {
    samples.push_back({{"theta", s.theta},
                       {"y", s.y},
                       {"force", s.force},
                       {"epe", s.epe}});
  }
  j["samples"] = samples;
  j["final_epe"] = p.final_epe();
  j["normalized_energy"] = p.normalized_energy();
  return j.dump(2) + "\n";
}

ChargingProfile profile_from_json(const std::string& text) {
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const std::exception& e) {
    throw ParseError(std::string("invalid profile JSON: ") + e.what());
  }
  if (!j.contains("f_max") || !j.contains("d") || !j.contains("samples")) {
    throw ParseError("profile JSON is missing f_max, d, or samples");
  }
  ChargingProfile p;
  p.f_max = j["f_max"].get<double>();
  p.d = j["d"].get<double>();
  for (const auto& s : j["samples"]) {
    p.samples.push_back({s.at("theta").get<double>(), s.at("y").get<double>(),
                         s.at("force").get<double>(), s.at("epe").get<double>()});
  }
  return p;
}

std::string profile_to_svg(const ChargingProfile& p, const RunStamp& stamp) {
  Series force;
  for (const auto& s : p.samples) {
    force.pts.push_back({s.y / p.d, s.force / p.f_max});
  }
  return svg_chart(stamp, "y / d", "F / F_max", {force});
}

std::string sweep_to_csv(const SweepResult& s, const RunStamp& stamp) {
  std::ostringstream out;
  append_stamp_csv(out, stamp);
  out << "gamma,solvable,normalized_energy,normalized_stiffness,note\n";
  for (const auto& pt : s.points) {
    out << format_double(pt.gamma) << ',' << (pt.solvable ? "1" : "0") << ',';
    if (pt.solvable) {
      out << format_double(pt.normalized_energy) << ','
          << format_double(pt.normalized_stiffness);
    } else {
      out << ',';
    }
    out << ',' << csv_escape(pt.note) << "\n";
  }
  return out.str();
}

std::string sweep_to_json(const SweepResult& s, const RunStamp& stamp) {
  ordered_json j = stamp_json(stamp);
  j["model"] = to_string(s.model);
  ordered_json pts = ordered_json::array();
  for (const auto& pt : s.points) {
    ordered_json o;
    o["gamma"] = pt.gamma;
    o["solvable"] = pt.solvable;
    if (pt.solvable) {
      o["normalized_energy"] = pt.normalized_energy;
      o["normalized_stiffness"] = pt.normalized_stiffness;
    } else {
      o["normalized_energy"] = nullptr;
      o["normalized_stiffness"] = nullptr;
      o["note"] = pt.note;
    }
    pts.push_back(o);
  }
  j["points"] = pts;
  return j.dump(2) + "\n";
}

std::string sweep_to_svg(const SweepResult& s, const RunStamp& stamp) {
  // Break the polyline at unsolvable ratios so the gap stays visible.
  std::vector<Series> series;
  Series cur;
  for (const auto& pt : s.points) {
    if (!pt.solvable) {
      if (!cur.pts.empty()) series.push_back(cur);
      cur.pts.clear();
      continue;
    }
    cur.pts.push_back({pt.gamma, pt.normalized_energy});
  }
  if (!cur.pts.empty()) series.push_back(cur);
  return svg_chart(stamp, "position ratio", "EPE / (F_max d)", series);
}

std::string composition_to_csv(const CompositionReport& r, const RunStamp& stamp) {
  std::ostringstream out;
  append_stamp_csv(out, stamp);
  out << "# force_cv: " << format_double(r.cv) << "\n";
  out << "# normalized_energy: " << format_double(r.normalized_energy) << "\n";
  out << "theta_deg,y_m,F_total_n,F_over_Fmax,EPE_j";
  for (const auto& name : r.component_names) out << ",F_" << name << "_n";
  out << "\n";
  for (size_t i = 0; i < r.total.samples.size(); ++i) {
    const auto& s = r.total.samples[i];
    out << format_double(rad_to_deg(s.theta)) << ',' << format_double(s.y)
        << ',' << format_double(s.force) << ','
        << format_double(s.force / r.total.f_max) << ','
        << format_double(s.epe);
    for (const auto& comp : r.component_forces) out << ',' << format_double(comp[i]);
    out << "\n";
  }
  return out.str();
}

std::string composition_to_json(const CompositionReport& r,
                                const RunStamp& stamp) {
  ordered_json j = stamp_json(stamp);
  j["force_cv"] = r.cv;
  j["normalized_energy"] = r.normalized_energy;
  j["f_max"] = r.total.f_max;
  j["d"] = r.total.d;
  j["components"] = r.component_names;
  ordered_json samples = ordered_json::array();
  for (size_t i = 0; i < r.total.samples.size(); ++i) {
    const auto& s = r.total.samples[i];
    ordered_json o{{"theta", s.theta},
                   {"y", s.y},
                   {"force", s.force},
                   {"epe", s.epe}};
    ordered_json parts = ordered_json::array();
    for (const auto& comp : r.component_forces) parts.push_back(comp[i]);
    o["component_forces"] = parts;
    samples.push_back(o);
  }
  j["samples"] = samples;
  return j.dump(2) + "\n";
}

std::string composition_to_svg(const CompositionReport& r,
                               const RunStamp& stamp) {
  static const char* colors[] = {"#c23b22", "#2a9d8f", "#7b5aa6", "#b08900"};
  std::vector<Series> series;
  Series total;
  for (const auto& s : r.total.samples) {
    total.pts.push_back({s.y / r.total.d, s.force / r.total.f_max});
  }
  series.push_back(total);
  for (size_t c = 0; c < r.component_forces.size(); ++c) {
    Series comp;
    comp.color = colors[c % 4];
    for (size_t i = 0; i < r.total.samples.size(); ++i) {
      comp.pts.push_back(
          {r.total.samples[i].y / r.total.d, r.component_forces[c][i] / r.total.f_max});
    }
    series.push_back(comp);
  }
  return svg_chart(stamp, "y / d", "F / F_max", series);
}

std::string verify_to_csv(const VerifyReport& r, const RunStamp& stamp) {
  std::ostringstream out;
  append_stamp_csv(out, stamp);
  out << "# model: " << to_string(r.spec.model) << "\n";
  out << "# step_m: " << format_double(r.step) << "\n";
  out << "# tolerance: " << format_double(r.tolerance) << "\n";
  out << "# max_rel_err: " << format_double(r.max_rel_err) << "\n";
  out << "# passed: " << (r.passed ? "yes" : "no") << "\n";
  if (!r.branch_note.empty()) {
    out << "# phi_branches: " << r.branch_note << "\n";
    out << "# max_rel_err_geometric: " << format_double(r.max_rel_err_geometric)
        << "\n";
    out << "# max_rel_err_principal: " << format_double(r.max_rel_err_principal)
        << "\n";
  }
  const bool branches = !r.branch_rows.empty();
  out << "theta_deg,f_closed_n,f_oracle_n,rel_err";
  if (branches) out << ",f_phi_geometric_n,f_phi_principal_n";
  out << "\n";
  for (size_t i = 0; i < r.rows.size(); ++i) {
    const auto& row = r.rows[i];
    out << format_double(rad_to_deg(row.theta)) << ','
        << format_double(row.f_closed) << ',' << format_double(row.f_oracle)
        << ',' << format_double(row.rel_err);
    if (branches) {
      out << ',' << format_double(r.branch_rows[i].f_geometric) << ','
          << format_double(r.branch_rows[i].f_principal);
    }
    out << "\n";
  }
  return out.str();
}

std::string verify_to_json(const VerifyReport& r, const RunStamp& stamp) {
  ordered_json j = stamp_json(stamp);
  j["model"] = to_string(r.spec.model);
  if (r.spec.uses_gamma()) j["gamma"] = r.spec.gamma;
  j["stiffness"] = r.spec.effective_stiffness();
  j["step_m"] = r.step;
  j["tolerance"] = r.tolerance;
  j["max_rel_err"] = r.max_rel_err;
  j["passed"] = r.passed;
  ordered_json rows = ordered_json::array();
  for (const auto& row : r.rows) {
    rows.push_back({{"theta", row.theta},
                    {"f_closed", row.f_closed},
                    {"f_oracle", row.f_oracle},
                    {"rel_err", row.rel_err}});
  }
  j["rows"] = rows;
  if (!r.branch_rows.empty()) {
    j["phi_branches"] = r.branch_note;
    j["max_rel_err_geometric"] = r.max_rel_err_geometric;
    j["max_rel_err_principal"] = r.max_rel_err_principal;
    ordered_json brs = ordered_json::array();
    for (const auto& b : r.branch_rows) {
      brs.push_back({{"theta", b.theta},
                     {"f_geometric", b.f_geometric},
                     {"f_principal", b.f_principal},
                     {"f_oracle", b.f_oracle}});
    }
    j["branch_rows"] = brs;
  }
  return j.dump(2) + "\n";
}

std::string predictions_to_csv(const std::vector<JumpPrediction>& preds,
                               const RunStamp& stamp) {
  std::ostringstream out;
  append_stamp_csv(out, stamp);
  out << "name,force_to_weight,h_measured_m,h_measured_norm,h_energy_m,"
         "h_energy_norm,h_ideal_projected_norm,h_ideal_max_norm,improvement,"
         "note\n";
  for (const auto& p : preds) {
    out << csv_escape(p.name) << ',' << opt_csv(p.force_to_weight) << ','
        << opt_csv(p.h_measured_m) << ',' << opt_csv(p.h_measured_norm) << ','
        << opt_csv(p.h_energy_m) << ',' << opt_csv(p.h_energy_norm) << ','
        << opt_csv(p.h_ideal_projected_norm) << ','
        << opt_csv(p.h_ideal_max_norm) << ',' << opt_csv(p.improvement) << ','
        << csv_escape(p.note) << "\n";
  }
  return out.str();
}

std::string predictions_to_json(const std::vector<JumpPrediction>& preds,
                                const RunStamp& stamp) {
  ordered_json j = stamp_json(stamp);
  ordered_json rows = ordered_json::array();
  for (const auto& p : preds) {
    ordered_json o;
    o["name"] = p.name;
    o["force_to_weight"] = opt_json(p.force_to_weight);
    o["h_measured_m"] = opt_json(p.h_measured_m);
    o["h_measured_norm"] = opt_json(p.h_measured_norm);
    o["h_energy_m"] = opt_json(p.h_energy_m);
    o["h_energy_norm"] = opt_json(p.h_energy_norm);
    o["h_ideal_projected_norm"] = opt_json(p.h_ideal_projected_norm);
    o["h_ideal_max_norm"] = opt_json(p.h_ideal_max_norm);
    o["improvement"] = opt_json(p.improvement);
    if (!p.note.empty()) o["note"] = p.note;
    rows.push_back(o);
  }
  j["predictions"] = rows;
  return j.dump(2) + "\n";
}

}  // namespace springlink
