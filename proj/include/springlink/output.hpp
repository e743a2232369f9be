#pragma once

#include <string>
#include <utility>
#include <vector>

#include "springlink/energetics.hpp"
#include "springlink/oracle.hpp"
#include "springlink/robots.hpp"

namespace springlink {

// Reproducibility stamp emitted at the top of every file: the subcommand and
// the full normalized parameter set of the run.
struct RunStamp {
  std::string command;
  std::vector<std::pair<std::string, std::string>> params;
};

enum class OutputFormat { Csv, Json, Svg };

OutputFormat parse_format(const std::string& name);

// Lossless double formatting (%.17g, C locale, LF line endings throughout).
std::string format_double(double v);

std::string profile_to_csv(const ChargingProfile& p, const RunStamp& stamp);
std::string profile_to_json(const ChargingProfile& p, const RunStamp& stamp);
std::string profile_to_svg(const ChargingProfile& p, const RunStamp& stamp);

// Re-ingests profile JSON; exact double round-trip.
ChargingProfile profile_from_json(const std::string& text);

std::string sweep_to_csv(const SweepResult& s, const RunStamp& stamp);
std::string sweep_to_json(const SweepResult& s, const RunStamp& stamp);
std::string sweep_to_svg(const SweepResult& s, const RunStamp& stamp);

// Superposed profile plus per-component force columns, with the flatness and
// energy summary in the header.
struct CompositionReport {
  ChargingProfile total;
  std::vector<std::string> component_names;
  std::vector<std::vector<double>> component_forces;  // [component][sample]
  double cv = 0.0;
  double normalized_energy = 0.0;
};

std::string composition_to_csv(const CompositionReport& r, const RunStamp& stamp);
std::string composition_to_json(const CompositionReport& r, const RunStamp& stamp);
std::string composition_to_svg(const CompositionReport& r, const RunStamp& stamp);

std::string verify_to_csv(const VerifyReport& r, const RunStamp& stamp);
std::string verify_to_json(const VerifyReport& r, const RunStamp& stamp);

std::string predictions_to_csv(const std::vector<JumpPrediction>& preds,
                               const RunStamp& stamp);
std::string predictions_to_json(const std::vector<JumpPrediction>& preds,
                                const RunStamp& stamp);

}  // namespace springlink
