#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace squeeze {

/// One row of the verification report.
struct CheckResult {
  std::string suite;
  std::string check;
  double residual = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

struct VerifyOptions {
  std::uint64_t seed = 42;
  /// Keyed "suite.check"; replaces the built-in tolerance.
  std::map<std::string, double> tolerance_overrides;
};

/// Runs the invariant suites (states, singlemode, spectral, multimode,
/// fockoracle). Rows are ordered by suite name, then by check order within
/// the suite, so reports are byte-identical across runs.
std::vector<CheckResult> run_verification(const VerifyOptions& opts = {});

/// Names of every check, "suite.check", in report order.
std::vector<std::string> verification_keys();

}  // namespace squeeze
