#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "germlab/analysis.hpp"
#include "germlab/foliation.hpp"
#include "germlab/germ_file.hpp"
#include "json.hpp"

namespace germlab {

inline constexpr const char* kVersion = "0.1.0";
inline constexpr const char* kReportSchema = "germlab-report/1";

namespace exit_code {
inline constexpr int no_obstruction = 0;
inline constexpr int input_error = 1;
inline constexpr int fast_cycle = 10;
inline constexpr int unverified = 20;
}  // namespace exit_code

int exit_code_for(Verdict v);

struct CommandOptions {
  std::uint64_t seed = 0;
  std::optional<std::size_t> budget;
  std::string epsilon = "1/10";
  std::size_t samples = 50;
  bool assume_milnor_fibre = false;
  bool assume_noncontractible_component = false;
  bool probabilistic_nnd = false;
  bool allow_large_epsilon = false;
  bool timing = false;
  /// Echoed into the report; does not affect the computation.
  std::string input_name;
};

struct CommandResult {
  int exit_code = exit_code::input_error;
  nlohmann::ordered_json report;
  /// Plain-text result (the Milnor number for `milnor`).
  std::string text;
  /// Arc dump (`foliate` only).
  std::string csv;
};

/// analyze | newton | sigma | foliate | milnor. Throws germlab::Error for
/// invalid input; budget exhaustion is reported with exit code 20.
CommandResult run_command(const std::string& command, const GermFile& file,
                          const CommandOptions& options = {});

/// Accepts "a/b", integers and decimals.
std::complex<double> parse_epsilon(const std::string& text);

nlohmann::ordered_json to_json(const AnalysisReport& report);
nlohmann::ordered_json to_json(const ObstructionLocus& locus, const std::vector<std::string>& vars);
nlohmann::ordered_json to_json(const NewtonAnalysis& analysis, const std::vector<std::string>& vars);
nlohmann::ordered_json to_json(const FoliationReport& report);
nlohmann::ordered_json to_json(const GermSystem& system);

}  // namespace germlab
