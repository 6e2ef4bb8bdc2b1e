#pragma once

#include <utility>

namespace fermipair {

// Everything evaluated at one point of the f^2 axis. All entropic
// quantities are in bits.
struct MeasureSet {
  double f2;
  double p;
  double fidelity;
  double concurrence;
  double eof;
  double e_re;
  double mutual_info;
  double classical_corr;
  double g_parallel;
  double g_antiparallel;
  bool entangled;
  bool bell_violating;
};

// Bell-CHSH violation threshold in f^2: p > 1/sqrt(2) <=> f^2 > 2(sqrt(2)-1).
inline constexpr double kBellThresholdF2 = 0.82842712474619009760;

// C = max{0, (2 f^2 - 1)/(2 - f^2)}.
double concurrence_closed(double f2);

// E_F(C) = h((1 + sqrt(1 - C^2))/2).
double entanglement_of_formation(double concurrence);

// E_RE = 1 + F log2 F + (1-F) log2(1-F) for F >= 1/2, and 0 below.
// Continuous at F = 1/2.
double relative_entropy_entanglement(double fidelity);

// I = 2 + F log2 F + (1-F) log2[(1-F)/3], equal to 2 - S(rho) since both
// marginals are maximally mixed.
double mutual_information(double fidelity);

// Classical correlation I - E_RE, so the additive split holds by
// construction. Equals 1 - (1-F) log2 3 above F = 1/2 and I below.
double classical_correlation(double fidelity);

// Same- and opposite-spin pair distribution functions,
// g_parallel = (1 - f^2)/2 and g_antiparallel = 1/2.
std::pair<double, double> pair_distributions(double f2);

struct Classification {
  bool entangled;
  bool bell_violating;
};

// entangled <=> f^2 > 1/2 (PPT threshold), bell_violating <=> f^2 above
// kBellThresholdF2.
Classification classify(double f2);

MeasureSet measure_set(double f2);

}  // namespace fermipair
