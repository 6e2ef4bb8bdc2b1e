#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "fermipair/dataset.hpp"
#include "fermipair/validate.hpp"
#include "fermipair/version.hpp"

namespace {

using namespace fermipair;

// Exit codes: 0 success, 1 validation failure, 2 configuration error,
// 3 numeric failure (quadrature depth, missing bracket, bad domain).
constexpr int kExitValidation = 1;
constexpr int kExitConfig = 2;
constexpr int kExitNumeric = 3;

struct CommonOptions {
  std::string format = "csv";
  std::string out = "-";
  bool reproducible = false;
};

void add_common(CLI::App* cmd, CommonOptions* opts,
                std::vector<std::string> formats = {"csv", "json"}) {
  cmd->add_option("--format", opts->format, "Output format")
      ->check(CLI::IsMember(std::move(formats)))
      ->capture_default_str();
  cmd->add_option("--out", opts->out, "Output path, '-' for stdout")
      ->capture_default_str();
  cmd->add_flag("--reproducible", opts->reproducible,
                "Suppress timestamps so reruns are byte identical");
}

void emit(const Table& table, const CommonOptions& opts) {
  std::ostream* os = &std::cout;
  std::ofstream file;
  if (opts.out != "-") {
    file.open(opts.out, std::ios::binary);
    if (!file) throw ConfigError("cannot open output file: " + opts.out);
    os = &file;
  }
  if (opts.format == "json")
    write_json(table, *os);
  else
    write_csv(table, *os);
}

void emit_text(const std::string& text, const CommonOptions& opts) {
  if (opts.out == "-") {
    std::cout << text;
    return;
  }
  std::ofstream file(opts.out, std::ios::binary);
  if (!file) throw ConfigError("cannot open output file: " + opts.out);
  file << text;
}

int run_validate(bool quick) {
  const std::vector<CheckResult> results = run_validation(quick);
  int failures = 0;
  for (const CheckResult& check : results) {
    std::cout << (check.passed ? "PASS" : "FAIL") << "  " << check.name
              << ": " << check.detail << "\n";
    if (!check.passed) ++failures;
  }
  std::cout << (failures == 0 ? "all checks passed" :
                std::to_string(failures) + " check(s) failed")
            << " (" << results.size() << " run)\n";
  return failures == 0 ? 0 : kExitValidation;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Pair correlations and spin entanglement of the ideal Fermi gas"};
  app.set_version_flag("--version", std::string(kVersion));
  app.require_subcommand(1);

  // profile
  auto* profile = app.add_subcommand(
      "profile", "Sweep the pair function and all measures over (k_F r, T/T_F)");
  SweepConfig sweep;
  int dim_flag = 3;
  CommonOptions profile_opts;
  profile->add_option("--x-min", sweep.x_min)->capture_default_str();
  profile->add_option("--x-max", sweep.x_max)->capture_default_str();
  profile->add_option("--x-steps", sweep.x_steps)->capture_default_str();
  profile->add_option("--temps", sweep.t_values, "T/T_F values (comma list)")
      ->delimiter(',')
      ->capture_default_str();
  profile->add_option("--dim", dim_flag, "Spatial dimension")
      ->check(CLI::IsMember({2, 3}))
      ->capture_default_str();
  add_common(profile, &profile_opts);

  // shift
  auto* shift = app.add_subcommand(
      "shift", "Thermal shifts of f, concurrence, and E_RE at fixed k_F r");
  double shift_x = 1.0;
  std::vector<double> shift_temps = {0.01, 0.02, 0.03, 0.04, 0.05};
  bool no_sommerfeld = false;
  CommonOptions shift_opts;
  shift->add_option("--x", shift_x, "k_F r")->capture_default_str();
  shift->add_option("--temps", shift_temps, "T/T_F values (comma list)")
      ->delimiter(',')
      ->capture_default_str();
  shift->add_flag("--no-sommerfeld", no_sommerfeld,
                  "Drop the closed-form comparison columns");
  add_common(shift, &shift_opts);

  // surface
  auto* surface = app.add_subcommand(
      "surface", "delta_f over a (k_F r, T/T_F) grid in long format");
  double surf_x_min = 0.0, surf_x_max = 6.0;
  int surf_x_steps = 61;
  std::vector<double> surf_temps = {0.05, 0.1, 0.15, 0.2};
  CommonOptions surface_opts;
  surface->add_option("--x-min", surf_x_min)->capture_default_str();
  surface->add_option("--x-max", surf_x_max)->capture_default_str();
  surface->add_option("--x-steps", surf_x_steps)->capture_default_str();
  surface->add_option("--temps", surf_temps, "T/T_F values (comma list)")
      ->delimiter(',')
      ->capture_default_str();
  add_common(surface, &surface_opts);

  // state
  auto* state = app.add_subcommand(
      "state", "Report the two-spin density matrix and measures at one f^2");
  double state_f2 = 0.0;
  CommonOptions state_opts;
  state_opts.format = "text";
  state->add_option("f2", state_f2, "Pair-function square, in [0, 1]")
      ->required();
  add_common(state, &state_opts, {"text", "json"});

  // mu
  auto* mu = app.add_subcommand(
      "mu", "Chemical potential versus the Sommerfeld approximation");
  std::vector<double> mu_temps = {0.0, 0.05, 0.1, 0.15, 0.2, 0.3, 0.5};
  CommonOptions mu_opts;
  mu->add_option("--temps", mu_temps, "T/T_F values (comma list)")
      ->delimiter(',')
      ->capture_default_str();
  add_common(mu, &mu_opts);

  // validate
  auto* validate = app.add_subcommand("validate", "Run the invariant suite");
  bool quick = false;
  validate->add_flag("--quick", quick, "Fast subset of the checks");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitConfig;
  }

  try {
    if (profile->parsed()) {
      sweep.dimension = (dim_flag == 2) ? Dimension::Two : Dimension::Three;
      emit(profile_table(sweep, profile_opts.reproducible), profile_opts);
    } else if (shift->parsed()) {
      emit(shift_table(shift_x, shift_temps, !no_sommerfeld,
                       shift_opts.reproducible),
           shift_opts);
    } else if (surface->parsed()) {
      emit(surface_table(surf_x_min, surf_x_max, surf_x_steps, surf_temps,
                         surface_opts.reproducible),
           surface_opts);
    } else if (state->parsed()) {
      const std::string text =
          state_opts.format == "json"
              ? state_report_json(state_f2, state_opts.reproducible)
              : state_report_text(state_f2, state_opts.reproducible);
      emit_text(text, state_opts);
    } else if (mu->parsed()) {
      emit(mu_table(mu_temps, mu_opts.reproducible), mu_opts);
    } else if (validate->parsed()) {
      return run_validate(quick);
    }
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const std::exception& e) {
    std::cerr << "numeric error: " << e.what() << "\n";
    return kExitNumeric;
  }
  return 0;
}
