#include "commands.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <ostream>
#include <sstream>

#include "parallel.hpp"
#include "rindler_ferm/entanglement.hpp"
#include "rindler_ferm/errors.hpp"
#include "rindler_ferm/format.hpp"

namespace rindler_ferm::cli {

namespace {

struct SweepRow {
  double r = 0.0;
  double analytic = 0.0;
  std::optional<double> bruteforce;
  double closed_form = 0.0;
};

SweepRow evaluate(const Scenario& scenario, const FieldKind& field, double r_value) {
  const SqueezeParam r(r_value);
  SweepRow row{r.value(), negativity_blocks(scenario, field, r).value, std::nullopt, closed_form_negativity(r)};
  try {
    row.bruteforce = negativity_bruteforce(trace_out_region_iv(build_joint_state(scenario, field, r), field));
  } catch (const CapacityError&) {
  }
  return row;
}

std::string dump_path(const std::string& base, std::size_t index, std::size_t total) {
  if (total == 1) return base;
  const auto dot = base.rfind('.');
  const auto slash = base.rfind('/');
  const std::string suffix = "_" + std::to_string(index);
  if (dot == std::string::npos || (slash != std::string::npos && dot < slash)) return base + suffix;
  return base.substr(0, dot) + suffix + base.substr(dot);
}

}  // namespace

int cmd_sweep(const SweepConfig& config, std::ostream& out, std::ostream& err) {
  try {
    validate(config);
  } catch (const std::exception& e) {
    err << "configuration error: " << e.what() << '\n';
    return kConfigError;
  }

  const Scenario scenario = scenario_for(config);
  const FieldKind field = field_or_default(config);
  const std::vector<double> grid = resolved_r_grid(config);

  std::vector<SweepRow> rows;
  try {
    rows = parallel_map(grid.size(), config.threads, [&](std::size_t i) { return evaluate(scenario, field, grid[i]); });
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kConfigError;
  }

  if (config.require_bruteforce)
    for (const auto& row : rows)
      if (!row.bruteforce) {
        err << "capacity error: brute-force negativity is infeasible for n=" << field.mode_count() << '\n';
        return kCapacityError;
      }

  std::ofstream file;
  if (!config.out.empty()) {
    file.open(config.out);
    if (!file) {
      err << "cannot open '" << config.out << "' for writing\n";
      return kConfigError;
    }
  }
  std::ostream& csv = config.out.empty() ? out : file;
  csv << "scenario,n,r,negativity_analytic,negativity_bruteforce,abs_error,closed_form\n";
  for (const auto& row : rows) {
    double abs_error = std::abs(row.analytic - row.closed_form);
    if (row.bruteforce) abs_error = std::max(abs_error, std::abs(*row.bruteforce - row.closed_form));
    csv << to_string(scenario.kind) << ',' << field.mode_count() << ',' << format_real(row.r) << ','
        << format_real(row.analytic) << ',' << (row.bruteforce ? format_real(*row.bruteforce) : std::string()) << ','
        << format_real(abs_error) << ',' << format_real(row.closed_form) << '\n';
  }

  if (!config.dump_rho.empty()) {
    for (std::size_t i = 0; i < grid.size(); ++i) {
      const std::string path = dump_path(config.dump_rho, i, grid.size());
      std::ofstream rho_file(path);
      if (!rho_file) {
        err << "cannot open '" << path << "' for writing\n";
        return kConfigError;
      }
      try {
        analytic_density(scenario, field, SqueezeParam(grid[i])).write_csv(rho_file);
      } catch (const CapacityError& e) {
        err << "capacity error: " << e.what() << '\n';
        return kCapacityError;
      }
    }
  }
  return kSuccess;
}

int cmd_blocks(const SweepConfig& config, std::ostream& out, std::ostream& err) {
  try {
    validate(config);
  } catch (const std::exception& e) {
    err << "configuration error: " << e.what() << '\n';
    return kConfigError;
  }

  const Scenario scenario = scenario_for(config);
  const FieldKind field = field_or_default(config);
  const double r = config.r_grid && !config.r_grid->empty() ? config.r_grid->front() : 0.5;

  std::optional<std::map<int, Count>> census;
  bool feasible = true;
  try {
    const auto rho = trace_out_region_iv(build_joint_state(scenario, field, SqueezeParam(r)), field);
    census = block_census(scenario, field, extract_blocks(partial_transpose_alice(rho)));
  } catch (const CapacityError&) {
    feasible = false;
  } catch (const StructuralError& e) {
    err << "structural error: " << e.what() << '\n';
    return kCheckFailure;
  }

  if (config.require_bruteforce && !feasible) {
    err << "capacity error: block extraction is infeasible for n=" << field.mode_count() << '\n';
    return kCapacityError;
  }

  out << "m,formula,extracted,match\n";
  bool all_match = true;
  for (int m = 0; m <= max_block_excitation(scenario.kind, field.mode_count()); ++m) {
    const Count formula = block_multiplicity(scenario.kind, field.mode_count(), m);
    out << m << ',' << to_string(formula) << ',';
    if (census) {
      const auto it = census->find(m);
      const Count extracted = it == census->end() ? Count{0} : it->second;
      const bool match = extracted == formula;
      all_match = all_match && match;
      out << to_string(extracted) << ',' << (match ? "yes" : "no") << '\n';
    } else {
      out << "-,-\n";
    }
  }
  return all_match ? kSuccess : kCheckFailure;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Fermionic entanglement degradation under the Unruh effect"};
  app.require_subcommand(1);
  app.set_config("--config", "", "key=value config file; flags override it");

  SweepConfig config;
  config.threads = worker_count_from_env();
  std::string scenario, field, r_grid, a_grid, rob;
  std::optional<int> modes;
  std::optional<double> tol;

  app.fallthrough();
  app.add_option("--scenario", scenario, "VacOneDirac, BellDirac or VacOneSpinless");
  app.add_option("--field", field, "Dirac or Spinless");
  app.add_option("--modes,-n", modes, "number of momentum modes n");
  auto* r_grid_option = app.add_option("--r-grid", r_grid, "r values: 0,pi/8,0.5 or linspace:COUNT:LO:HI");
  auto* a_grid_option = app.add_option("--a-grid", a_grid, "accelerations, converted with --k0 and --c");
  app.add_option("--k0", config.k0, "mode frequency scale for --a-grid");
  app.add_option("--c", config.c, "speed of light for --a-grid");
  app.add_option("--tol", tol, "tolerance override for every check");
  app.add_option("--rob", rob, "Rob's mode(s), e.g. 2u or 1u,1d");
  app.add_flag("--require-bruteforce", config.require_bruteforce, "exit 3 when brute force is infeasible");
  app.add_option("--out", config.out, "sweep CSV path (default stdout)");
  app.add_option("--dump-rho", config.dump_rho, "sweep: write the density matrix CSV per grid point");

  auto* sweep = app.add_subcommand("sweep", "negativity vs r as CSV");
  auto* verify = app.add_subcommand("verify", "run the oracle suites");
  app.add_subcommand("blocks", "block multiplicity table");

  std::vector<std::string> args;
  for (int i = argc - 1; i > 0; --i) args.emplace_back(argv[i]);
  try {
    app.parse(std::move(args));
  } catch (const CLI::CallForHelp& e) {
    out << app.help(e.get_name() == "--help" ? "" : e.get_name());
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    std::ostringstream message;
    app.exit(e, message, message);
    err << message.str();
    return e.get_exit_code() == 0 ? kSuccess : kConfigError;
  }

  try {
    if (!scenario.empty()) config.scenario = parse_scenario(scenario);
    if (!field.empty()) config.field = parse_field_type(field);
    config.modes = modes;
    config.tol = tol;
    if (r_grid_option->count() > 0) config.r_grid = parse_r_grid(r_grid);
    if (a_grid_option->count() > 0) config.a_grid = parse_a_grid(a_grid);
    if (!rob.empty()) config.rob = parse_rob_modes(rob);
  } catch (const std::exception& e) {
    err << "configuration error: " << e.what() << '\n';
    return kConfigError;
  }

  if (sweep->parsed()) return cmd_sweep(config, out, err);
  if (verify->parsed()) return cmd_verify(config, out, err);
  return cmd_blocks(config, out, err);
}

}  // namespace rindler_ferm::cli
