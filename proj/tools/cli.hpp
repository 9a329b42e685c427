#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace imlab::cli {

enum ExitCode : int {
  kSuccess = 0,
  kVerificationFailure = 1,
  kUsageError = 2,
  kNotApplicable = 3,
};

/// Runs the command line `args` (args[0] is the program name) and returns the
/// process exit code.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace imlab::cli
