#pragma once

// Self-verification over a seeded random parameter grid.  Each class compares
// two independent computations of the same quantity.

#include <cstdint>
#include <string>
#include <vector>

namespace qbarrier::cli {

struct CheckResult {
  std::string name;
  bool passed = false;
  /// Largest deviation seen.
  double worst = 0.0;
  double tolerance = 0.0;
  std::size_t samples = 0;
  std::string detail;
};

struct VerifyOptions {
  std::size_t samples = 500;
  std::uint64_t seed = 42;
  /// Oracle integrations are the slow part; they run on the first
  /// min(samples, oracle_samples) points.
  std::size_t oracle_samples = 500;
};

std::vector<CheckResult> run_verification(const VerifyOptions& options);

}  // namespace qbarrier::cli
