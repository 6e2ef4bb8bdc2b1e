#pragma once

#include <span>
#include <stdexcept>

#include "fermipair/fermi_gas.hpp"

namespace fermipair {

enum class ShiftMethod { numeric, first_order };
enum class ShiftQuantity { f, c, ere };

// One point of a thermal-shift sweep.
struct ShiftRecord {
  double x;
  double t_rel;
  double delta_f;
  double delta_c;
  double delta_ere;
  ShiftMethod method;
};

class DegenerateFitError : public std::runtime_error {
 public:
  explicit DegenerateFitError(const char* what);
};

// delta_f(x, T) = f(x, T) - f(x, 0), from the finite-T quadrature.
double delta_f_numeric(double x, const ThermalState& thermal,
                       const QuadratureSpec& spec = {});
double delta_f_numeric(double x, double t_rel);

// Concurrence shift. numeric: C(f(x,T)^2) - C(f(x,0)^2). first_order: the
// linearized 6 f0 / (2 - f0^2)^2 * delta_f, meaningful only where the
// zero-T state is entangled (f0^2 > 1/2).
double delta_concurrence(double x, const ThermalState& thermal,
                         ShiftMethod method, const QuadratureSpec& spec = {});
double delta_concurrence(double x, double t_rel, ShiftMethod method);

// E_RE(f(x,T)^2) - E_RE(f(x,0)^2). Pinned at zero when both fidelities sit
// below 1/2.
double delta_relative_entropy(double x, const ThermalState& thermal,
                              const QuadratureSpec& spec = {});
double delta_relative_entropy(double x, double t_rel);

ShiftRecord shift_record(double x, double t_rel, ShiftMethod method);

// Least-squares slope of log|delta| versus log t. Throws DegenerateFitError
// for fewer than 3 points, nonpositive t, or a vanishing delta.
double power_law_exponent(std::span<const double> t_grid,
                          std::span<const double> deltas);

// Fitted low-temperature exponent of the chosen shift at fixed x; the grid
// should stay in the degenerate regime (t <= 0.05 recommended).
double scaling_exponent(double x, std::span<const double> t_grid,
                        ShiftQuantity quantity);

}  // namespace fermipair
