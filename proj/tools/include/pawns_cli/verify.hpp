#pragma once

#include <string>
#include <vector>

namespace pawns::cli {

enum class VerifyLevel { quick, full };

enum class CheckStatus { pass, fail, deviation };

struct CheckResult {
  std::string name;
  CheckStatus status = CheckStatus::pass;
  std::string detail;
};

std::string to_string(CheckStatus s);

/// Every cross-check the library supports. A deviation is a published value
/// that differs from the corrected one; it does not count as a failure.
std::vector<CheckResult> run_verification(VerifyLevel level);

bool all_passed(const std::vector<CheckResult>& checks);

}  // namespace pawns::cli
