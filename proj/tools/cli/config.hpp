#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rindler_ferm/density.hpp"

namespace rindler_ferm::cli {

enum ExitCode : int { kSuccess = 0, kCheckFailure = 1, kConfigError = 2, kCapacityError = 3 };

/// Everything a subcommand needs. Unset optionals mean "use the command's default".
struct SweepConfig {
  std::optional<ScenarioKind> scenario;
  std::optional<FieldType> field;
  std::optional<int> modes;
  std::optional<std::vector<double>> r_grid;
  std::optional<std::vector<double>> a_grid;
  double k0 = 1.0;
  double c = 1.0;
  std::vector<ModeLabel> rob;
  std::string out;
  std::string dump_rho;
  std::optional<double> tol;
  bool require_bruteforce = false;
  unsigned threads = 1;
};

/// Comma-separated values ("0,0.1,pi/4") or "linspace:COUNT:LO:HI". Empty text
/// is an empty grid. Throws ValidationError.
std::vector<double> parse_r_grid(std::string_view text);

/// Comma-separated positive accelerations; "inf" allowed.
std::vector<double> parse_a_grid(std::string_view text);

std::vector<ModeLabel> parse_rob_modes(std::string_view text);

/// RINDLER_FERM_THREADS, else hardware concurrency.
unsigned worker_count_from_env();

/// Throws ValidationError on an inconsistent config.
void validate(const SweepConfig& config);

ScenarioKind scenario_or_default(const SweepConfig& config);
FieldKind field_or_default(const SweepConfig& config);
Scenario scenario_for(const SweepConfig& config);

/// The r grid for sweep/blocks: explicit r values, or converted accelerations,
/// or the default 33-point grid on [0, pi/4].
std::vector<double> resolved_r_grid(const SweepConfig& config);

std::vector<double> default_grid(int points);

}  // namespace rindler_ferm::cli
