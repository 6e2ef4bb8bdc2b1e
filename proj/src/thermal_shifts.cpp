#include "fermipair/thermal_shifts.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "fermipair/measures.hpp"
#include "fermipair/spin_state.hpp"

namespace fermipair {

DegenerateFitError::DegenerateFitError(const char* what)
    : std::runtime_error(what) {}

namespace {

double clamped_f2(double f) { return std::clamp(f * f, 0.0, 1.0); }

double fidelity_of(double f) { return werner_from_f2(clamped_f2(f)).fidelity; }

}  // namespace

double delta_f_numeric(double x, const ThermalState& thermal,
                       const QuadratureSpec& spec) {
  return f_finite_t(x, thermal, spec).f - f_zero_t(x, Dimension::Three).f;
}

double delta_f_numeric(double x, double t_rel) {
  return delta_f_numeric(x, solve_chemical_potential(t_rel), {});
}

double delta_concurrence(double x, const ThermalState& thermal,
                         ShiftMethod method, const QuadratureSpec& spec) {
  const double f0 = f_zero_t(x, Dimension::Three).f;
  if (method == ShiftMethod::first_order) {
    const double denom = 2.0 - f0 * f0;
    return 6.0 * f0 / (denom * denom) * delta_f_numeric(x, thermal, spec);
  }
  const double ft = f_finite_t(x, thermal, spec).f;
  return concurrence_closed(clamped_f2(ft)) - concurrence_closed(clamped_f2(f0));
}

double delta_concurrence(double x, double t_rel, ShiftMethod method) {
  return delta_concurrence(x, solve_chemical_potential(t_rel), method, {});
}

double delta_relative_entropy(double x, const ThermalState& thermal,
                              const QuadratureSpec& spec) {
  const double f0 = f_zero_t(x, Dimension::Three).f;
  const double ft = f_finite_t(x, thermal, spec).f;
  return relative_entropy_entanglement(fidelity_of(ft)) -
         relative_entropy_entanglement(fidelity_of(f0));
}

double delta_relative_entropy(double x, double t_rel) {
  return delta_relative_entropy(x, solve_chemical_potential(t_rel), {});
}

ShiftRecord shift_record(double x, double t_rel, ShiftMethod method) {
  const ThermalState thermal = solve_chemical_potential(t_rel);
  return {x,
          t_rel,
          delta_f_numeric(x, thermal, {}),
          delta_concurrence(x, thermal, method, {}),
          delta_relative_entropy(x, thermal, {}),
          method};
}

double power_law_exponent(std::span<const double> t_grid,
                          std::span<const double> deltas) {
  if (t_grid.size() < 3 || t_grid.size() != deltas.size())
    throw DegenerateFitError("power_law_exponent: need at least 3 (t, delta) pairs");
  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
  const double n = static_cast<double>(t_grid.size());
  for (size_t i = 0; i < t_grid.size(); ++i) {
    if (!(t_grid[i] > 0.0))
      throw DegenerateFitError("power_law_exponent: t values must be > 0");
    if (deltas[i] == 0.0)
      throw DegenerateFitError("power_law_exponent: zero delta makes the fit degenerate");
    const double lx = std::log(t_grid[i]);
    const double ly = std::log(std::abs(deltas[i]));
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  const double denom = n * sxx - sx * sx;
  if (denom == 0.0)
    throw DegenerateFitError("power_law_exponent: t grid has no spread");
  return (n * sxy - sx * sy) / denom;
}

double scaling_exponent(double x, std::span<const double> t_grid,
                        ShiftQuantity quantity) {
  std::vector<double> deltas;
  deltas.reserve(t_grid.size());
  for (double t : t_grid) {
    const ThermalState thermal = solve_chemical_potential(t);
    switch (quantity) {
      case ShiftQuantity::f:
        deltas.push_back(delta_f_numeric(x, thermal, {}));
        break;
      case ShiftQuantity::c:
        deltas.push_back(delta_concurrence(x, thermal, ShiftMethod::numeric, {}));
        break;
      case ShiftQuantity::ere:
        deltas.push_back(delta_relative_entropy(x, thermal, {}));
        break;
    }
  }
  return power_law_exponent(t_grid, deltas);
}

}  // namespace fermipair
