#pragma once

#include <string>
#include <vector>

#include "spacs/observables.hpp"

namespace spacs {

struct CheckOptions {
  bool quick = false;  // skip the joint-evolution oracle grid
  GammaConvention gamma = GammaConvention::corrected;
  unsigned threads = 1;
};

struct CheckResult {
  std::string name;
  bool passed;
  std::string detail;
  double seconds;
};

/// The invariant suite behind `spacs check`: closed-form pairings, the
/// branch-decomposition identity, the oracle grid, baselines and the trend
/// assertions. Every check runs; none short-circuits another.
std::vector<CheckResult> run_checks(const CheckOptions& options = {});

}  // namespace spacs
