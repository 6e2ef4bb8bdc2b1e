#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "fermipair/fermi_gas.hpp"

namespace fermipair {

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class OutputFormat { csv, json };

struct SweepConfig {
  double x_min = 0.0;
  double x_max = 12.0;
  int x_steps = 241;
  std::vector<double> t_values = {0.0};
  Dimension dimension = Dimension::Three;
  OutputFormat output_format = OutputFormat::csv;
  std::string output_path = "-";
};

using Cell = std::variant<double, bool>;

// Column-ordered dataset plus provenance metadata. CSV renders metadata as
// '#'-prefixed lines before the header; JSON mirrors the same records as an
// array of row objects under "rows" with the metadata under "meta".
struct Table {
  std::vector<std::pair<std::string, std::string>> meta;
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
};

// Shortest representation that parses back to the same double.
std::string format_double(double v);

// Provenance header shared by every command: tool, version, command name,
// config echo, and (unless reproducible) a generation timestamp.
std::vector<std::pair<std::string, std::string>> dataset_meta(
    const std::string& command, const std::string& config_echo,
    bool reproducible);

// Pair-function and measure sweep over the (x, t) grid, one row per point,
// ordered by (t, x). Finite temperatures require the 3D gas.
Table profile_table(const SweepConfig& config, bool reproducible);

// Thermal shifts at fixed x over a temperature grid: numeric and closed-form
// delta_f, both concurrence branches, delta E_RE, and each delta divided by
// t^2 (zero rows emit 0 for the ratio columns).
Table shift_table(double x, std::vector<double> t_grid,
                  bool include_sommerfeld, bool reproducible);

// Long-format delta_f(x, t) grid for surface plots.
Table surface_table(double x_min, double x_max, int x_steps,
                    std::vector<double> t_grid, bool reproducible);

// Solved chemical potential versus the quadratic Sommerfeld approximation.
Table mu_table(std::vector<double> t_grid, bool reproducible);

// Single-state report: density matrix, eigenvalues, Werner parameters, all
// measures, PPT minimum eigenvalue, threshold flags.
std::string state_report_text(double f2, bool reproducible);
std::string state_report_json(double f2, bool reproducible);

void write_csv(const Table& table, std::ostream& os);
void write_json(const Table& table, std::ostream& os);

}  // namespace fermipair
