#pragma once

#include <string>
#include <vector>

namespace fermipair {

struct CheckResult {
  std::string name;
  bool passed;
  std::string detail;
};

// Self-contained invariant suite: normalization, closed-form versus matrix
// oracles, the sum rule, entanglement thresholds, and the low-temperature
// scaling exponents. quick = true runs the subset that finishes in a few
// seconds and skips the exponent fits.
std::vector<CheckResult> run_validation(bool quick);

}  // namespace fermipair
