#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace pawns::cli {

enum ExitCode : int {
  kOk = 0,
  kVerifyFailed = 1,
  kUsage = 2,
  kGuard = 3,
  kNonConverged = 4,
  kBadInput = 5,
};

/// Runs the tool on `args` (program name excluded) and returns the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace pawns::cli
