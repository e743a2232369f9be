#include "springlink/robots.hpp"

#include <cmath>
#include <fstream>
#include <istream>
#include <sstream>
#include <string>
#include <vector>

namespace springlink {

namespace {

const char* kHeader = "name,mass_kg,f_max_n,d_m,energy_fraction,v_to_mps,source";

std::string strip_cr(std::string line) {
  if (!line.empty() && line.back() == '\r') line.pop_back();
  return line;
}

// Minimal CSV field splitter: double-quoted fields may contain commas,
// embedded quotes are doubled.
std::vector<std::string> split_fields(const std::string& line, int row) {
  std::vector<std::string> out;
  std::string field;
  bool quoted = false;
  for (size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"') {
        if (i + 1 < line.size() && line[i + 1] == '"') {
          field += '"';
          ++i;
        } else {
          quoted = false;
        }
      } else {
        field += c;
      }
    } else if (c == '"' && field.empty()) {
      quoted = true;
    } else if (c == ',') {
      out.push_back(field);
      field.clear();
    } else {
      field += c;
    }
  }
  if (quoted) {
    throw ParseError("row " + std::to_string(row) + ": unterminated quote");
  }
  out.push_back(field);
  return out;
}

std::optional<double> parse_optional(const std::string& field,
                                     const std::string& column, int row,
                                     const std::string& name) {
  if (field.empty()) return std::nullopt;
  size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(field, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != field.size() || !std::isfinite(v)) {
    throw ParseError("row " + std::to_string(row) + " (" + name + "): field " +
                     column + ": not a number: '" + field + "'");
  }
  return v;
}

void require_positive(const std::optional<double>& v, const std::string& column,
                      int row, const std::string& name) {
  if (v && !(*v > 0.0)) {
    throw ParseError("row " + std::to_string(row) + " (" + name + "): field " +
                     column + " must be positive");
  }
}

}  // namespace

std::vector<RobotRecord> load_catalogue(std::istream& in) {
  std::string line;
  int row = 0;
  bool header_seen = false;
  std::vector<RobotRecord> out;
  while (std::getline(in, line)) {
    ++row;
    line = strip_cr(line);
    if (line.empty() || line[0] == '#') continue;
    if (!header_seen) {
      if (line != kHeader) {
        throw ParseError("row " + std::to_string(row) +
                         ": expected header '" + kHeader + "'");
      }
      header_seen = true;
      continue;
    }
    const std::vector<std::string> f = split_fields(line, row);
    if (f.size() != 7) {
      throw ParseError("row " + std::to_string(row) + ": expected 7 fields, got " +
                       std::to_string(f.size()));
    }
    RobotRecord rec;
    rec.name = f[0];
    if (rec.name.empty()) {
      throw ParseError("row " + std::to_string(row) + ": empty robot name");
    }
    rec.mass_kg = parse_optional(f[1], "mass_kg", row, rec.name);
    rec.f_max_n = parse_optional(f[2], "f_max_n", row, rec.name);
    rec.d_m = parse_optional(f[3], "d_m", row, rec.name);
    rec.energy_fraction = parse_optional(f[4], "energy_fraction", row, rec.name);
    rec.v_to_mps = parse_optional(f[5], "v_to_mps", row, rec.name);
    rec.source = f[6];

    require_positive(rec.mass_kg, "mass_kg", row, rec.name);
    require_positive(rec.f_max_n, "f_max_n", row, rec.name);
    require_positive(rec.d_m, "d_m", row, rec.name);
    if (rec.energy_fraction &&
        (!(*rec.energy_fraction > 0.0) || *rec.energy_fraction > 1.0)) {
      throw ParseError("row " + std::to_string(row) + " (" + rec.name +
                       "): field energy_fraction must lie in (0, 1]");
    }
    if (rec.v_to_mps && *rec.v_to_mps < 0.0) {
      throw ParseError("row " + std::to_string(row) + " (" + rec.name +
                       "): field v_to_mps must be non-negative");
    }
    out.push_back(rec);
  }
  if (!header_seen) {
    throw ParseError("catalogue is empty; expected header '" +
                     std::string(kHeader) + "'");
  }
  return out;
}

std::vector<RobotRecord> load_catalogue_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw ParseError("cannot open catalogue file: " + path);
  }
  return load_catalogue(in);
}

double height_from_velocity(double v_to, double g) {
  if (!(g > 0.0)) throw ConfigError("gravity must be positive");
  if (v_to < 0.0) throw DomainError("take-off velocity must be non-negative");
  return v_to * v_to / (2.0 * g);
}

double height_from_energy(double epe_j, double mass_kg, double g) {
  if (!(g > 0.0)) throw ConfigError("gravity must be positive");
  if (!(mass_kg > 0.0)) throw DomainError("mass must be positive");
  if (epe_j < 0.0) throw DomainError("stored energy must be non-negative");
  return epe_j / (mass_kg * g);
}

JumpPrediction predict_improvement(const RobotRecord& rec, double g) {
  JumpPrediction p;
  p.name = rec.name;
  if (!rec.v_to_mps && !rec.energy_fraction) {
    p.note = "insufficient data: need take-off velocity or stored-energy fraction";
    return p;
  }

  if (rec.f_max_n && rec.mass_kg) {
    p.force_to_weight = *rec.f_max_n / (*rec.mass_kg * g);
    // A loss-free constant-force spring converts all of f_max * d, so its
    // normalized height equals the force-to-weight ratio.
    p.h_ideal_max_norm = p.force_to_weight;
  }
  if (rec.v_to_mps) {
    p.h_measured_m = height_from_velocity(*rec.v_to_mps, g);
    if (rec.d_m) p.h_measured_norm = *p.h_measured_m / *rec.d_m;
  }
  if (rec.energy_fraction) {
    p.improvement = 1.0 / *rec.energy_fraction - 1.0;
    if (rec.f_max_n && rec.d_m && rec.mass_kg) {
      p.h_energy_m = height_from_energy(
          *rec.energy_fraction * *rec.f_max_n * *rec.d_m, *rec.mass_kg, g);
      p.h_energy_norm = *p.h_energy_m / *rec.d_m;
    }
    if (p.h_measured_norm) {
      // Measured jump rescaled to a full-conversion spring with the same
      // downstream losses.
      p.h_ideal_projected_norm = *p.h_measured_norm / *rec.energy_fraction;
    }
  }

  std::ostringstream missing;
  if (!rec.energy_fraction) missing << "energy_fraction ";
  if (!rec.v_to_mps) missing << "v_to_mps ";
  if (!rec.d_m) missing << "d_m ";
  if (!rec.f_max_n) missing << "f_max_n ";
  if (!rec.mass_kg) missing << "mass_kg ";
  const std::string m = missing.str();
  if (!m.empty()) p.note = "missing: " + m.substr(0, m.size() - 1);
  return p;
}

std::vector<JumpPrediction> predict_improvements(
    const std::vector<RobotRecord>& recs, double g) {
  std::vector<JumpPrediction> out;
  out.reserve(recs.size());
  for (const auto& r : recs) out.push_back(predict_improvement(r, g));
  return out;
}

}  // namespace springlink
