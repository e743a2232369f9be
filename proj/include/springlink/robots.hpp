#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "springlink/errors.hpp"

namespace springlink {

inline constexpr double kStandardGravity = 9.81;  // m/s^2

// One catalogued jumping robot. Fields absent from the published record stay
// empty; `source` carries the citation and estimation notes.
struct RobotRecord {
  std::string name;
  std::optional<double> mass_kg;
  std::optional<double> f_max_n;          // peak spring-charging force
  std::optional<double> d_m;              // characteristic length
  std::optional<double> energy_fraction;  // stored EPE / (f_max * d), in (0, 1]
  std::optional<double> v_to_mps;         // take-off velocity
  std::string source;
};

// Reads the catalogue (header: name,mass_kg,f_max_n,d_m,energy_fraction,
// v_to_mps,source). Empty fields mean unknown. Errors name row and field.
std::vector<RobotRecord> load_catalogue(std::istream& in);
std::vector<RobotRecord> load_catalogue_file(const std::string& path);

// Ballistic apex above take-off: v^2 / (2g).
double height_from_velocity(double v_to, double g = kStandardGravity);

// Loss-free jump height from stored energy: epe / (m g).
double height_from_energy(double epe_j, double mass_kg, double g = kStandardGravity);

struct JumpPrediction {
  std::string name;
  std::optional<double> force_to_weight;        // f_max / (m g)
  std::optional<double> h_measured_m;           // from v_to
  std::optional<double> h_measured_norm;        // h_measured / d
  std::optional<double> h_energy_m;             // from fraction * f_max * d
  std::optional<double> h_energy_norm;
  std::optional<double> h_ideal_projected_norm; // measured height scaled to an
                                                // ideal spring at equal losses
  std::optional<double> h_ideal_max_norm;       // loss-free ideal bound,
                                                // equals force_to_weight
  std::optional<double> improvement;            // 1/fraction - 1
  std::string note;                             // diagnostics for missing data
};

// Per-record prediction. A record missing both v_to and energy_fraction gets
// an insufficient-data note instead of numbers.
JumpPrediction predict_improvement(const RobotRecord& rec,
                                   double g = kStandardGravity);

std::vector<JumpPrediction> predict_improvements(
    const std::vector<RobotRecord>& recs, double g = kStandardGravity);

}  // namespace springlink
