#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace spext::cli {

/// Stable exit codes.
enum ExitCode : int {
  kOk = 0,
  kUsageError = 1,
  kVerificationFailed = 2,
  kNoConvergence = 3,
};

/// Runs the command line `args` (without the program name). "-" as a file
/// name reads `in` or writes `out`.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err);

}  // namespace spext::cli
