#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace qfid {

struct VerifyConfig {
  std::vector<std::size_t> dims = {2, 4, 8, 16};
  std::size_t trials = 10;  // per dimension and suite; must be >= 1
  std::uint64_t seed = 1;
};

struct SuiteResult {
  std::string name;
  bool passed = true;
  double max_deviation = 0.0;  // worst case over the suite, in the suite's own measure
  double tolerance = 0.0;
  std::size_t cases = 0;
  std::string first_failure;  // empty when passed
};

struct VerifyReport {
  std::vector<SuiteResult> suites;

  bool all_passed() const;
  /// Name of the first failing suite, in run order.
  std::optional<std::string> first_failing_suite() const;
};

/// Runs the trace, cyclicity, theorem, symmetry, range, commuting, pure-state,
/// unitary-invariance and product-spectrum suites over dims x trials.
/// Deterministic in cfg: repeated runs report identical deviations.
VerifyReport run_verify(const VerifyConfig& cfg);

}  // namespace qfid
