#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qfid::cli {

/// Exit codes; stable across releases.
enum ExitCode : int {
  kOk = 0,
  kCheckFailed = 1,       // a verify suite or a benchmark cell failed
  kInvalidInput = 2,      // matrix file does not parse or is not a density matrix
  kDimensionMismatch = 3,
  kUsage = 64,
  kIoFailure = 74,
};

/// Entry point behind `qfid`; args[0] is the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qfid::cli
