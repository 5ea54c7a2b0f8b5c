#include "config.hpp"

#include <charconv>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <numbers>
#include <thread>

#include "rindler_ferm/errors.hpp"

namespace rindler_ferm::cli {

namespace {

std::string_view trim(std::string_view text) {
  while (!text.empty() && (text.front() == ' ' || text.front() == '\t')) text.remove_prefix(1);
  while (!text.empty() && (text.back() == ' ' || text.back() == '\t')) text.remove_suffix(1);
  return text;
}

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = text.find(sep, start);
    out.push_back(trim(text.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start)));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

double parse_number(std::string_view token) {
  if (token == "inf") return std::numeric_limits<double>::infinity();
  if (token.starts_with("pi")) {
    double divisor = 1.0;
    if (token.size() > 2) {
      if (token[2] != '/') throw ValidationError("bad number '" + std::string(token) + "'");
      divisor = parse_number(token.substr(3));
    }
    return std::numbers::pi / divisor;
  }
  double value = 0.0;
  const char* last = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(token.data(), last, value);
  if (ec != std::errc() || ptr != last || token.empty())
    throw ValidationError("bad number '" + std::string(token) + "'");
  return value;
}

}  // namespace

std::vector<double> parse_r_grid(std::string_view text) {
  text = trim(text);
  if (text.empty()) return {};
  if (text.starts_with("linspace:")) {
    const auto parts = split(text.substr(9), ':');
    if (parts.size() != 3) throw ValidationError("linspace grid needs COUNT:LO:HI");
    const double count = parse_number(parts[0]);
    if (count < 1 || count != std::floor(count)) throw ValidationError("linspace count must be a positive integer");
    const double lo = parse_number(parts[1]);
    const double hi = parse_number(parts[2]);
    const int points = static_cast<int>(count);
    std::vector<double> out;
    for (int i = 0; i < points; ++i) out.push_back(points == 1 ? lo : lo + (hi - lo) * i / (points - 1));
    return out;
  }
  std::vector<double> out;
  for (auto token : split(text, ',')) out.push_back(parse_number(token));
  return out;
}

std::vector<double> parse_a_grid(std::string_view text) {
  text = trim(text);
  if (text.empty()) return {};
  std::vector<double> out;
  for (auto token : split(text, ',')) out.push_back(parse_number(token));
  return out;
}

std::vector<ModeLabel> parse_rob_modes(std::string_view text) {
  std::vector<ModeLabel> out;
  for (auto token : split(text, ',')) out.push_back(parse_mode(token));
  return out;
}

unsigned worker_count_from_env() {
  if (const char* env = std::getenv("RINDLER_FERM_THREADS"); env != nullptr && *env != '\0') {
    unsigned value = 0;
    const std::string_view text(env);
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || ptr != text.data() + text.size() || value == 0)
      throw ValidationError("RINDLER_FERM_THREADS must be a positive integer, got '" + std::string(text) + "'");
    return value;
  }
  return std::max(1U, std::thread::hardware_concurrency());
}

void validate(const SweepConfig& config) {
  if (config.modes && *config.modes < 1) throw ValidationError("--modes must be >= 1");
  if (config.scenario && config.field && field_type_of(*config.scenario) != *config.field)
    throw ValidationError("--field " + to_string(*config.field) + " does not match scenario " +
                          to_string(*config.scenario));
  if (config.r_grid && config.a_grid) throw ValidationError("give either --r-grid or --a-grid, not both");
  if (config.r_grid)
    for (double r : *config.r_grid)
      if (!(r >= 0.0 && r <= SqueezeParam::kMax + 1e-15))
        throw ValidationError("r grid value " + std::to_string(r) + " outside [0, pi/4]");
  if (config.a_grid) {
    for (double a : *config.a_grid)
      if (!(a > 0.0)) throw ValidationError("accelerations must be positive");
    if (!(config.k0 > 0.0) || !(config.c > 0.0)) throw ValidationError("--k0 and --c must be positive");
  }
  if (config.tol && !(*config.tol > 0.0)) throw ValidationError("--tol must be positive");
  if (config.threads == 0) throw ValidationError("worker count must be positive");
  if (!config.rob.empty()) validate(scenario_for(config), field_or_default(config));
}

ScenarioKind scenario_or_default(const SweepConfig& config) {
  if (config.scenario) return *config.scenario;
  if (config.field && *config.field == FieldType::SpinlessFermion) return ScenarioKind::VacOneSpinless;
  return ScenarioKind::VacOneDirac;
}

FieldKind field_or_default(const SweepConfig& config) {
  return FieldKind(field_type_of(scenario_or_default(config)), config.modes.value_or(1));
}

Scenario scenario_for(const SweepConfig& config) {
  Scenario scenario = Scenario::standard(scenario_or_default(config));
  if (!config.rob.empty()) scenario.rob_modes = config.rob;
  return scenario;
}

std::vector<double> default_grid(int points) {
  std::vector<double> out;
  for (int i = 0; i < points; ++i) out.push_back(SqueezeParam::kMax * i / (points - 1));
  return out;
}

std::vector<double> resolved_r_grid(const SweepConfig& config) {
  if (config.r_grid) return *config.r_grid;
  if (config.a_grid) {
    std::vector<double> out;
    for (double a : *config.a_grid) out.push_back(from_acceleration(a, config.k0, config.c).value());
    return out;
  }
  return default_grid(33);
}

}  // namespace rindler_ferm::cli
