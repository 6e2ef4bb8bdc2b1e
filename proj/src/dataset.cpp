#include "fermipair/dataset.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cmath>
#include <numbers>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "fermipair/measures.hpp"
#include "fermipair/spin_state.hpp"
#include "fermipair/thermal_shifts.hpp"
#include "fermipair/version.hpp"

namespace fermipair {

namespace {

using ordered_json = nlohmann::ordered_json;

double normalize_zero(double v) { return v == 0.0 ? 0.0 : v; }

std::string iso8601_now() {
  const auto now = std::chrono::system_clock::now();
  const std::time_t t = std::chrono::system_clock::to_time_t(now);
  std::tm utc{};
  gmtime_r(&t, &utc);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &utc);
  return buf;
}

std::vector<double> sorted_temps(std::vector<double> ts, const char* who) {
  if (ts.empty())
    throw ConfigError(std::string(who) + ": need at least one temperature");
  for (double t : ts)
    if (!(t >= 0.0))
      throw ConfigError(std::string(who) +
                        ": temperatures must be >= 0 (got " +
                        format_double(t) + ")");
  std::sort(ts.begin(), ts.end());
  return ts;
}

std::vector<double> x_grid(double x_min, double x_max, int x_steps,
                           const char* who) {
  if (!(x_min >= 0.0))
    throw ConfigError(std::string(who) + ": x_min must be >= 0");
  if (!(x_max > x_min))
    throw ConfigError(std::string(who) + ": x_max must exceed x_min");
  if (x_steps < 2)
    throw ConfigError(std::string(who) + ": x_steps must be >= 2");
  std::vector<double> xs(static_cast<size_t>(x_steps));
  for (int i = 0; i < x_steps; ++i)
    xs[static_cast<size_t>(i)] =
        x_min + (x_max - x_min) * i / static_cast<double>(x_steps - 1);
  return xs;
}

std::string temps_echo(const std::vector<double>& ts) {
  std::string s;
  for (size_t i = 0; i < ts.size(); ++i) {
    if (i) s += ",";
    s += format_double(ts[i]);
  }
  return s;
}

void push_measures(std::vector<Cell>& row, const MeasureSet& ms) {
  row.emplace_back(ms.f2);
  row.emplace_back(ms.p);
  row.emplace_back(ms.fidelity);
  row.emplace_back(ms.concurrence);
  row.emplace_back(ms.eof);
  row.emplace_back(ms.e_re);
  row.emplace_back(ms.mutual_info);
  row.emplace_back(ms.classical_corr);
  row.emplace_back(ms.g_parallel);
  row.emplace_back(ms.g_antiparallel);
  row.emplace_back(ms.entangled);
  row.emplace_back(ms.bell_violating);
}

ordered_json measures_json(const MeasureSet& ms) {
  ordered_json j;
  j["f2"] = normalize_zero(ms.f2);
  j["p"] = normalize_zero(ms.p);
  j["fidelity"] = normalize_zero(ms.fidelity);
  j["concurrence"] = normalize_zero(ms.concurrence);
  j["eof"] = normalize_zero(ms.eof);
  j["ere"] = normalize_zero(ms.e_re);
  j["mutual_info"] = normalize_zero(ms.mutual_info);
  j["classical_corr"] = normalize_zero(ms.classical_corr);
  j["g_parallel"] = normalize_zero(ms.g_parallel);
  j["g_antiparallel"] = normalize_zero(ms.g_antiparallel);
  j["entangled"] = ms.entangled;
  j["bell_violating"] = ms.bell_violating;
  return j;
}

}  // namespace

std::string format_double(double v) {
  v = normalize_zero(v);
  char buf[32];
  const auto result = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, result.ptr);
}

std::vector<std::pair<std::string, std::string>> dataset_meta(
    const std::string& command, const std::string& config_echo,
    bool reproducible) {
  std::vector<std::pair<std::string, std::string>> meta = {
      {"tool", "fermipair"},
      {"version", kVersion},
      {"command", command},
      {"config", config_echo},
  };
  if (!reproducible) meta.emplace_back("generated", iso8601_now());
  return meta;
}

Table profile_table(const SweepConfig& config, bool reproducible) {
  const std::vector<double> temps = sorted_temps(config.t_values, "profile");
  const std::vector<double> xs =
      x_grid(config.x_min, config.x_max, config.x_steps, "profile");
  if (config.dimension == Dimension::Two && temps.back() > 0.0)
    throw ConfigError(
        "profile: the 2D pair function is zero-temperature only; drop the "
        "finite temperatures or use --dim 3");

  Table table;
  table.meta = dataset_meta(
      "profile",
      "x_min=" + format_double(config.x_min) +
          " x_max=" + format_double(config.x_max) +
          " x_steps=" + std::to_string(config.x_steps) + " temps=" +
          temps_echo(temps) +
          " dim=" + (config.dimension == Dimension::Two ? "2" : "3"),
      reproducible);
  table.columns = {"kF_r",        "T_over_TF",    "mu_over_eF",
                   "f",           "f2",           "p",
                   "fidelity",    "concurrence",  "eof",
                   "ere",         "mutual_info",  "classical_corr",
                   "g_parallel",  "g_antiparallel", "entangled",
                   "bell_violating"};

  for (double t : temps) {
    const ThermalState thermal = solve_chemical_potential(t);
    for (double x : xs) {
      const double f = (t == 0.0) ? f_zero_t(x, config.dimension).f
                                  : f_finite_t(x, thermal).f;
      const MeasureSet ms = measure_set(std::clamp(f * f, 0.0, 1.0));
      std::vector<Cell> row;
      row.reserve(table.columns.size());
      row.emplace_back(x);
      row.emplace_back(t);
      row.emplace_back(thermal.mu_rel);
      row.emplace_back(f);
      push_measures(row, ms);
      table.rows.push_back(std::move(row));
    }
  }
  return table;
}

Table shift_table(double x, std::vector<double> t_grid,
                  bool include_sommerfeld, bool reproducible) {
  if (!(x > 0.0)) throw ConfigError("shift: x must be > 0");
  const std::vector<double> temps = sorted_temps(std::move(t_grid), "shift");

  Table table;
  table.meta = dataset_meta(
      "shift",
      "x=" + format_double(x) + " temps=" + temps_echo(temps) +
          " sommerfeld=" + (include_sommerfeld ? "true" : "false"),
      reproducible);
  table.columns = {"T_over_TF", "delta_f_numeric"};
  if (include_sommerfeld) table.columns.push_back("delta_f_sommerfeld");
  table.columns.push_back("delta_c_numeric");
  if (include_sommerfeld) table.columns.push_back("delta_c_first_order");
  table.columns.push_back("delta_ere_numeric");
  table.columns.push_back("delta_f_numeric_over_t2");
  if (include_sommerfeld) table.columns.push_back("delta_f_sommerfeld_over_t2");
  table.columns.push_back("delta_c_numeric_over_t2");
  if (include_sommerfeld) table.columns.push_back("delta_c_first_order_over_t2");
  table.columns.push_back("delta_ere_numeric_over_t2");

  const double f0 = f_zero_t(x, Dimension::Three).f;
  const double denom = 2.0 - f0 * f0;
  const double first_order_slope = 6.0 * f0 / (denom * denom);

  for (double t : temps) {
    const ThermalState thermal = solve_chemical_potential(t);
    const double df = delta_f_numeric(x, thermal, {});
    const double df_somm = delta_f_sommerfeld(x, t);
    const double dc = delta_concurrence(x, thermal, ShiftMethod::numeric, {});
    const double dc_fo = first_order_slope * df;
    const double dere = delta_relative_entropy(x, thermal, {});
    // t = 0 rows would divide 0/0; the ratio columns emit 0 there.
    const double inv_t2 = (t > 0.0) ? 1.0 / (t * t) : 0.0;

    std::vector<Cell> row;
    row.emplace_back(t);
    row.emplace_back(df);
    if (include_sommerfeld) row.emplace_back(df_somm);
    row.emplace_back(dc);
    if (include_sommerfeld) row.emplace_back(dc_fo);
    row.emplace_back(dere);
    row.emplace_back(df * inv_t2);
    if (include_sommerfeld) row.emplace_back(df_somm * inv_t2);
    row.emplace_back(dc * inv_t2);
    if (include_sommerfeld) row.emplace_back(dc_fo * inv_t2);
    row.emplace_back(dere * inv_t2);
    table.rows.push_back(std::move(row));
  }
  return table;
}

Table surface_table(double x_min, double x_max, int x_steps,
                    std::vector<double> t_grid, bool reproducible) {
  const std::vector<double> temps = sorted_temps(std::move(t_grid), "surface");
  const std::vector<double> xs = x_grid(x_min, x_max, x_steps, "surface");

  Table table;
  table.meta = dataset_meta(
      "surface",
      "x_min=" + format_double(x_min) + " x_max=" + format_double(x_max) +
          " x_steps=" + std::to_string(x_steps) + " temps=" + temps_echo(temps),
      reproducible);
  table.columns = {"kF_r", "T_over_TF", "delta_f"};

  for (double t : temps) {
    const ThermalState thermal = solve_chemical_potential(t);
    for (double x : xs) {
      const double df = f_finite_t(x, thermal).f - f_zero_t(x, Dimension::Three).f;
      table.rows.push_back({Cell{x}, Cell{t}, Cell{df}});
    }
  }
  return table;
}

Table mu_table(std::vector<double> t_grid, bool reproducible) {
  const std::vector<double> temps = sorted_temps(std::move(t_grid), "mu");

  Table table;
  table.meta = dataset_meta("mu", "temps=" + temps_echo(temps), reproducible);
  table.columns = {"T_over_TF", "mu_over_eF", "sommerfeld_mu"};
  for (double t : temps) {
    const ThermalState thermal = solve_chemical_potential(t);
    const double somm =
        1.0 - std::numbers::pi * std::numbers::pi / 12.0 * t * t;
    table.rows.push_back({Cell{t}, Cell{thermal.mu_rel}, Cell{somm}});
  }
  return table;
}

namespace {

struct StateReport {
  MeasureSet ms;
  TwoSpinDensityMatrix rho;
  EigenSym4 rho_eig;
  double ppt_min_eig;
};

StateReport build_state(double f2) {
  if (f2 < -1e-9 || f2 > 1.0 + 1e-9)
    throw ConfigError("state: f2 = " + format_double(f2) +
                      " outside [0, 1]");
  StateReport report{};
  report.ms = measure_set(std::clamp(f2, 0.0, 1.0));
  report.rho = density_matrix(werner_from_f2(report.ms.f2));
  report.rho_eig = eigen_sym4(report.rho.m);
  report.ppt_min_eig = eigen_sym4(partial_transpose(report.rho)).values[3];
  return report;
}

}  // namespace

std::string state_report_text(double f2, bool reproducible) {
  const StateReport r = build_state(f2);
  std::ostringstream os;
  for (const auto& [key, value] : dataset_meta("state", "f2=" + format_double(f2), reproducible))
    os << "# " << key << ": " << value << "\n";
  os << "f2             = " << format_double(r.ms.f2) << "\n";
  os << "werner_p       = " << format_double(r.ms.p) << "\n";
  os << "fidelity       = " << format_double(r.ms.fidelity) << "\n";
  os << "density matrix, basis (uu, ud, du, dd):\n";
  for (int i = 0; i < 4; ++i) {
    os << "  [";
    for (int j = 0; j < 4; ++j)
      os << (j ? ", " : " ") << format_double(r.rho.m(i, j));
    os << " ]\n";
  }
  os << "eigenvalues    =";
  for (double v : r.rho_eig.values) os << " " << format_double(v);
  os << "\n";
  os << "ppt_min_eig    = " << format_double(r.ppt_min_eig) << "\n";
  os << "concurrence    = " << format_double(r.ms.concurrence) << "\n";
  os << "eof            = " << format_double(r.ms.eof) << "\n";
  os << "ere            = " << format_double(r.ms.e_re) << "\n";
  os << "mutual_info    = " << format_double(r.ms.mutual_info) << "\n";
  os << "classical_corr = " << format_double(r.ms.classical_corr) << "\n";
  os << "g_parallel     = " << format_double(r.ms.g_parallel) << "\n";
  os << "g_antiparallel = " << format_double(r.ms.g_antiparallel) << "\n";
  os << "entangled      = " << (r.ms.entangled ? "true" : "false") << "\n";
  os << "bell_violating = " << (r.ms.bell_violating ? "true" : "false") << "\n";
  return os.str();
}

std::string state_report_json(double f2, bool reproducible) {
  const StateReport r = build_state(f2);
  ordered_json j;
  ordered_json meta;
  for (const auto& [key, value] : dataset_meta("state", "f2=" + format_double(f2), reproducible))
    meta[key] = value;
  j["meta"] = meta;
  j["measures"] = measures_json(r.ms);
  ordered_json matrix = ordered_json::array();
  for (int i = 0; i < 4; ++i) {
    ordered_json row = ordered_json::array();
    for (int jcol = 0; jcol < 4; ++jcol)
      row.push_back(normalize_zero(r.rho.m(i, jcol)));
    matrix.push_back(row);
  }
  j["density_matrix"] = matrix;
  ordered_json eigenvalues = ordered_json::array();
  for (double v : r.rho_eig.values) eigenvalues.push_back(normalize_zero(v));
  j["eigenvalues"] = eigenvalues;
  j["ppt_min_eigenvalue"] = normalize_zero(r.ppt_min_eig);
  return j.dump(2) + "\n";
}

void write_csv(const Table& table, std::ostream& os) {
  for (const auto& [key, value] : table.meta)
    os << "# " << key << ": " << value << "\n";
  for (size_t c = 0; c < table.columns.size(); ++c)
    os << (c ? "," : "") << table.columns[c];
  os << "\n";
  for (const auto& row : table.rows) {
    for (size_t c = 0; c < row.size(); ++c) {
      if (c) os << ",";
      if (std::holds_alternative<double>(row[c]))
        os << format_double(std::get<double>(row[c]));
      else
        os << (std::get<bool>(row[c]) ? "true" : "false");
    }
    os << "\n";
  }
}

void write_json(const Table& table, std::ostream& os) {
  ordered_json j;
  ordered_json meta;
  for (const auto& [key, value] : table.meta) meta[key] = value;
  j["meta"] = meta;
  ordered_json rows = ordered_json::array();
  for (const auto& row : table.rows) {
    ordered_json obj;
    for (size_t c = 0; c < row.size(); ++c) {
      if (std::holds_alternative<double>(row[c]))
        obj[table.columns[c]] = normalize_zero(std::get<double>(row[c]));
      else
        obj[table.columns[c]] = std::get<bool>(row[c]);
    }
    rows.push_back(obj);
  }
  j["rows"] = rows;
  os << j.dump(2) << "\n";
}

}  // namespace fermipair
