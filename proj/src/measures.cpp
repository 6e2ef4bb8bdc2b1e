#include "fermipair/measures.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "fermipair/numerics.hpp"
#include "fermipair/spin_state.hpp"

namespace fermipair {

namespace {

double checked_f2(double f2, const char* who) {
  if (f2 < -1e-9 || f2 > 1.0 + 1e-9)
    throw std::domain_error(std::string(who) + ": f2 = " + std::to_string(f2) +
                            " outside [0, 1]");
  return std::clamp(f2, 0.0, 1.0);
}

double checked_fidelity(double fidelity, const char* who) {
  if (fidelity < 0.25 - 1e-9 || fidelity > 1.0 + 1e-9)
    throw std::domain_error(std::string(who) + ": fidelity = " +
                            std::to_string(fidelity) + " outside [1/4, 1]");
  return std::clamp(fidelity, 0.25, 1.0);
}

constexpr double kLog2Of3 = 1.5849625007211561815;

}  // namespace

double concurrence_closed(double f2) {
  f2 = checked_f2(f2, "concurrence_closed");
  return std::max(0.0, (2.0 * f2 - 1.0) / (2.0 - f2));
}

double entanglement_of_formation(double concurrence) {
  if (concurrence < -1e-12 || concurrence > 1.0 + 1e-12)
    throw std::domain_error("entanglement_of_formation: concurrence outside [0, 1]");
  concurrence = std::clamp(concurrence, 0.0, 1.0);
  return binary_entropy(0.5 * (1.0 + std::sqrt(1.0 - concurrence * concurrence)));
}

double relative_entropy_entanglement(double fidelity) {
  const double f = checked_fidelity(fidelity, "relative_entropy_entanglement");
  if (f <= 0.5) return 0.0;
  return 1.0 + xlog2(f) + xlog2(1.0 - f);
}

double mutual_information(double fidelity) {
  const double f = checked_fidelity(fidelity, "mutual_information");
  // 2 + F log2 F + (1-F) log2[(1-F)/3], written so F = 1 stays finite.
  return 2.0 + xlog2(f) + xlog2(1.0 - f) - (1.0 - f) * kLog2Of3;
}

double classical_correlation(double fidelity) {
  return mutual_information(fidelity) - relative_entropy_entanglement(fidelity);
}

std::pair<double, double> pair_distributions(double f2) {
  f2 = checked_f2(f2, "pair_distributions");
  return {0.5 * (1.0 - f2), 0.5};
}

Classification classify(double f2) {
  f2 = checked_f2(f2, "classify");
  return {f2 > 0.5, f2 > kBellThresholdF2};
}

MeasureSet measure_set(double f2) {
  f2 = checked_f2(f2, "measure_set");
  const WernerParams werner = werner_from_f2(f2);
  const double c = concurrence_closed(f2);
  const double i = mutual_information(werner.fidelity);
  const double ere = relative_entropy_entanglement(werner.fidelity);
  const auto [g_par, g_anti] = pair_distributions(f2);
  const Classification flags = classify(f2);
  return {f2,
          werner.p,
          werner.fidelity,
          c,
          entanglement_of_formation(c),
          ere,
          i,
          i - ere,
          g_par,
          g_anti,
          flags.entangled,
          flags.bell_violating};
}

}  // namespace fermipair
