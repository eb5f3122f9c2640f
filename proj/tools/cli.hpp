#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace landauer::cli {

enum ExitCode : int {
  kSuccess = 0,
  kUsageError = 1,
  kInfeasible = 2,
  kTruncationFailure = 3,
  kViolationsFound = 4,
};

/// Runs `landauer <args...>` (args excludes the program name) and returns the
/// process exit code. Results go to `out`, diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace landauer::cli
