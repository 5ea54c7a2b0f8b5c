#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <sstream>

#include "commands.hpp"
#include "rindler_ferm/entanglement.hpp"
#include "rindler_ferm/errors.hpp"

namespace rindler_ferm::cli {

namespace {

constexpr double kCensusR = 0.5;
constexpr std::size_t kMaxListedFailures = 20;

struct Check {
  Check(std::string check_name, double tol) : name(std::move(check_name)), tolerance(tol) {}

  std::string name;
  double tolerance = 0.0;
  double max_deviation = 0.0;
  std::size_t points = 0;
  std::size_t skipped = 0;
  std::vector<std::string> failures;

  void record(double deviation, const std::string& where) {
    ++points;
    max_deviation = std::max(max_deviation, deviation);
    if (!(deviation <= tolerance)) failures.push_back(where + " deviation=" + format(deviation));
  }
  void fail(const std::string& where) {
    ++points;
    failures.push_back(where);
  }
  bool passed() const noexcept { return failures.empty(); }

  static std::string format(double value) {
    char buffer[32];
    std::snprintf(buffer, sizeof buffer, "%.3e", value);
    return buffer;
  }
};

std::string where(const Scenario& scenario, const FieldKind& field, double r) {
  std::ostringstream out;
  out << "scenario=" << to_string(scenario.kind) << " n=" << field.mode_count() << " r=" << r;
  return out.str();
}

std::string where(const FieldKind& field, double r, const std::string& extra = {}) {
  std::ostringstream out;
  out << "field=" << to_string(field.type()) << " n=" << field.mode_count() << " r=" << r;
  if (!extra.empty()) out << ' ' << extra;
  return out.str();
}

class Plan {
 public:
  explicit Plan(const SweepConfig& config) : config_(config) {}

  std::vector<ScenarioKind> scenarios() const {
    if (config_.scenario) return {*config_.scenario};
    if (config_.field)
      return *config_.field == FieldType::Dirac ? std::vector{ScenarioKind::VacOneDirac, ScenarioKind::BellDirac}
                                                : std::vector{ScenarioKind::VacOneSpinless};
    return {ScenarioKind::VacOneDirac, ScenarioKind::BellDirac, ScenarioKind::VacOneSpinless};
  }

  std::vector<FieldType> field_types() const {
    std::vector<FieldType> out;
    for (auto kind : scenarios())
      if (std::find(out.begin(), out.end(), field_type_of(kind)) == out.end()) out.push_back(field_type_of(kind));
    return out;
  }

  /// Mode counts for `type`: the configured n, else 1..default_max.
  std::vector<int> modes(FieldType type, int dirac_max, int spinless_max) const {
    if (config_.modes) return {*config_.modes};
    const int hi = type == FieldType::Dirac ? dirac_max : spinless_max;
    std::vector<int> out;
    for (int n = 1; n <= hi; ++n) out.push_back(n);
    return out;
  }

  std::vector<double> grid(int default_points) const {
    if (config_.r_grid || config_.a_grid) return resolved_r_grid(config_);
    return default_grid(default_points);
  }

  double tol(double fallback) const { return config_.tol.value_or(fallback); }

  Scenario scenario(ScenarioKind kind) const {
    if (!config_.rob.empty() && config_.scenario == kind) return Scenario{kind, config_.rob};
    return Scenario::standard(kind);
  }

 private:
  const SweepConfig& config_;
};

Check annihilation_oracle(const Plan& plan) {
  Check check{"annihilation_oracle", plan.tol(1e-10)};
  for (auto type : plan.field_types()) {
    for (int n : plan.modes(type, 4, 6)) {
      const FieldKind field(type, n);
      for (double r : plan.grid(9)) {
        try {
          const SqueezeParam sp(r);
          const StateVector vac = build_vacuum(field, sp);
          for (const auto& mode : field.labels())
            check.record(norm(minkowski_annihilation(field, mode, sp, vac)), where(field, r, "mode=" + to_string(mode)));
        } catch (const CapacityError&) {
          ++check.skipped;
        }
      }
    }
  }
  return check;
}

Check vacuum_normalization(const Plan& plan) {
  Check check{"vacuum_normalization", plan.tol(1e-12)};
  for (auto type : plan.field_types()) {
    for (int n : plan.modes(type, 4, 6)) {
      const FieldKind field(type, n);
      const int power = field.is_dirac() ? 2 * n : n;
      for (double r : plan.grid(9)) {
        try {
          const SqueezeParam sp(r);
          const double bare = norm(build_unnormalized_vacuum(field, sp));
          check.record(std::abs(bare - 1.0 / std::pow(sp.cos(), power)), where(field, r, "unnormalized"));
          check.record(std::abs(norm(build_vacuum(field, sp)) - 1.0), where(field, r, "normalized"));
        } catch (const CapacityError&) {
          ++check.skipped;
        }
      }
    }
  }
  return check;
}

Check one_particle_consistency(const Plan& plan) {
  Check check{"one_particle_vs_creation", plan.tol(1e-10)};
  for (auto type : plan.field_types()) {
    for (int n : plan.modes(type, 4, 6)) {
      const FieldKind field(type, n);
      for (double r : plan.grid(9)) {
        try {
          const SqueezeParam sp(r);
          const StateVector vac = build_vacuum(field, sp);
          for (const auto& mode : field.labels()) {
            const StateVector built = build_one_particle(field, sp, mode);
            const StateVector created = minkowski_creation(field, mode, sp, vac);
            check.record(std::max(phase_insensitive_distance(built, created), std::abs(norm(built) - 1.0)),
                         where(field, r, "mode=" + to_string(mode)));
          }
        } catch (const CapacityError&) {
          ++check.skipped;
        }
      }
    }
  }
  return check;
}

std::pair<Check, Check> density_checks(const Plan& plan) {
  Check equivalence{"density_equivalence", plan.tol(1e-12)};
  Check properties{"density_properties", plan.tol(1e-12)};
  const double psd_tol = plan.tol(1e-10);
  for (auto kind : plan.scenarios()) {
    const Scenario scenario = plan.scenario(kind);
    for (int n : plan.modes(field_type_of(kind), 3, 6)) {
      const FieldKind field(field_type_of(kind), n);
      for (double r : plan.grid(9)) {
        try {
          const SqueezeParam sp(r);
          const DensityMatrix brute = trace_out_region_iv(build_joint_state(scenario, field, sp), field);
          const DensityMatrix analytic = analytic_density(scenario, field, sp);
          equivalence.record(analytic.max_abs_difference(brute), where(scenario, field, r));
          for (const DensityMatrix* rho : {&brute, &analytic}) {
            const DensityDiagnostics diag = diagnose(*rho);
            properties.record(std::max(diag.trace_error, diag.hermiticity_error), where(scenario, field, r));
            if (diag.min_eigenvalue < -psd_tol)
              properties.fail(where(scenario, field, r) + " min_eigenvalue=" + Check::format(diag.min_eigenvalue));
          }
        } catch (const CapacityError&) {
          ++equivalence.skipped;
          ++properties.skipped;
        }
      }
    }
  }
  return {equivalence, properties};
}

Check block_census_check(const Plan& plan) {
  Check check{"block_census", 0.0};
  for (auto kind : plan.scenarios()) {
    const Scenario scenario = plan.scenario(kind);
    for (int n : plan.modes(field_type_of(kind), 4, 6)) {
      const FieldKind field(field_type_of(kind), n);
      try {
        const auto rho = analytic_density(scenario, field, SqueezeParam(kCensusR));
        const auto census = block_census(scenario, field, extract_blocks(partial_transpose_alice(rho)));
        double mismatches = 0.0;
        for (int m = 0; m <= max_block_excitation(kind, n); ++m) {
          const auto it = census.find(m);
          if ((it == census.end() ? Count{0} : it->second) != block_multiplicity(kind, n, m)) mismatches += 1.0;
        }
        check.record(mismatches, where(scenario, field, kCensusR));
      } catch (const StructuralError& e) {
        check.fail(where(scenario, field, kCensusR) + " structural: " + e.what());
      } catch (const CapacityError&) {
        ++check.skipped;
      }
    }
  }
  return check;
}

Check counting_identities(const Plan& plan) {
  Check check{"counting_identities", 0.0};
  const int n_max = plan.modes(FieldType::Dirac, 6, 6).back();
  for (const auto& report : verify_counting_identities(std::min(n_max, 6))) {
    std::ostringstream tuple;
    tuple << report.quantity << " n=" << report.n << " m=" << report.m << " enumerated=" << to_string(report.enumerated)
          << " formula=" << to_string(report.formula);
    check.record(report.matches() ? 0.0 : 1.0, tuple.str());
  }
  return check;
}

std::pair<Check, Check> negativity_checks(const Plan& plan) {
  Check brute{"negativity_bruteforce", plan.tol(1e-10)};
  Check analytic{"negativity_analytic", plan.tol(1e-12)};
  for (auto kind : plan.scenarios()) {
    const Scenario scenario = plan.scenario(kind);
    for (int n : plan.modes(field_type_of(kind), 3, 6)) {
      const FieldKind field(field_type_of(kind), n);
      for (double r : plan.grid(33)) {
        const SqueezeParam sp(r);
        const double expected = closed_form_negativity(sp);
        try {
          const auto rho = trace_out_region_iv(build_joint_state(scenario, field, sp), field);
          brute.record(std::abs(negativity_bruteforce(rho) - expected), where(scenario, field, r));
        } catch (const CapacityError&) {
          ++brute.skipped;
        }
      }
    }
    for (int n : plan.modes(field_type_of(kind), 12, 64)) {
      const FieldKind field(field_type_of(kind), n);
      for (double r : plan.grid(33)) {
        const SqueezeParam sp(r);
        analytic.record(std::abs(negativity_blocks(scenario, field, sp).value - closed_form_negativity(sp)),
                        where(scenario, field, r));
      }
    }
  }
  return {brute, analytic};
}

Check monotone_degradation(const Plan& plan) {
  Check check{"monotone_degradation", 0.0};
  for (auto kind : plan.scenarios()) {
    const Scenario scenario = plan.scenario(kind);
    for (int n : plan.modes(field_type_of(kind), 12, 64)) {
      const FieldKind field(field_type_of(kind), n);
      auto grid = plan.grid(33);
      std::sort(grid.begin(), grid.end());
      grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
      double previous = 0.0;
      for (std::size_t i = 0; i < grid.size(); ++i) {
        const double value = negativity_blocks(scenario, field, SqueezeParam(grid[i])).value;
        if (i > 0 && value >= previous)
          check.fail(where(scenario, field, grid[i]) + " not below previous grid point");
        else if (i > 0)
          check.record(0.0, where(scenario, field, grid[i]));
        previous = value;
      }
    }
  }
  return check;
}

Check endpoints(const Plan& plan) {
  Check check{"negativity_endpoints", plan.tol(1e-12)};
  for (auto kind : plan.scenarios()) {
    const Scenario scenario = plan.scenario(kind);
    for (int n : plan.modes(field_type_of(kind), 12, 64)) {
      const FieldKind field(field_type_of(kind), n);
      check.record(std::abs(negativity_blocks(scenario, field, SqueezeParam(0.0)).value - 0.5), where(scenario, field, 0.0));
      check.record(std::abs(negativity_blocks(scenario, field, SqueezeParam(SqueezeParam::kMax)).value - 0.25),
                   where(scenario, field, SqueezeParam::kMax));
    }
  }
  return check;
}

// At r = 0 the state is a pure Bell pair; its partial transpose has nonzero
// spectrum {1/2, 1/2, 1/2, -1/2}.
Check bell_reference_spectrum(const Plan& plan) {
  Check check{"r0_transpose_spectrum", plan.tol(1e-12)};
  const std::vector<double> expected{-0.5, 0.5, 0.5, 0.5};
  for (auto kind : plan.scenarios()) {
    const Scenario scenario = plan.scenario(kind);
    for (int n : plan.modes(field_type_of(kind), 3, 6)) {
      const FieldKind field(field_type_of(kind), n);
      try {
        const auto pt = partial_transpose_alice(analytic_density(scenario, field, SqueezeParam(0.0)));
        std::vector<double> nonzero;
        for (double value : pt.eigenvalues())
          if (std::abs(value) > check.tolerance) nonzero.push_back(value);
        if (nonzero.size() != expected.size()) {
          check.fail(where(scenario, field, 0.0) + " nonzero eigenvalues=" + std::to_string(nonzero.size()));
          continue;
        }
        std::sort(nonzero.begin(), nonzero.end());
        double deviation = 0.0;
        for (std::size_t i = 0; i < expected.size(); ++i)
          deviation = std::max(deviation, std::abs(nonzero[i] - expected[i]));
        check.record(deviation, where(scenario, field, 0.0));
      } catch (const CapacityError&) {
        ++check.skipped;
      }
    }
  }
  return check;
}

}  // namespace

int cmd_verify(const SweepConfig& config, std::ostream& out, std::ostream& err) {
  try {
    validate(config);
  } catch (const std::exception& e) {
    err << "configuration error: " << e.what() << '\n';
    return kConfigError;
  }

  const Plan plan(config);
  std::vector<Check> checks;
  checks.push_back(annihilation_oracle(plan));
  checks.push_back(vacuum_normalization(plan));
  checks.push_back(one_particle_consistency(plan));
  auto [equivalence, properties] = density_checks(plan);
  checks.push_back(equivalence);
  checks.push_back(properties);
  checks.push_back(block_census_check(plan));
  checks.push_back(counting_identities(plan));
  auto [brute, analytic] = negativity_checks(plan);
  checks.push_back(brute);
  checks.push_back(analytic);
  checks.push_back(monotone_degradation(plan));
  checks.push_back(endpoints(plan));
  checks.push_back(bell_reference_spectrum(plan));

  bool all_passed = true;
  for (const auto& check : checks) {
    all_passed = all_passed && check.passed();
    char line[160];
    std::snprintf(line, sizeof line, "%s %-26s max_dev=%s tol=%s points=%zu skipped=%zu", check.passed() ? "PASS" : "FAIL",
                  check.name.c_str(), Check::format(check.max_deviation).c_str(),
                  Check::format(check.tolerance).c_str(), check.points, check.skipped);
    out << line << '\n';
    for (std::size_t i = 0; i < check.failures.size() && i < kMaxListedFailures; ++i)
      out << "    failing: " << check.failures[i] << '\n';
    if (check.failures.size() > kMaxListedFailures)
      out << "    ... " << check.failures.size() - kMaxListedFailures << " more\n";
  }
  out << (all_passed ? "all checks passed" : "some checks FAILED") << '\n';
  return all_passed ? kSuccess : kCheckFailure;
}

}  // namespace rindler_ferm::cli
