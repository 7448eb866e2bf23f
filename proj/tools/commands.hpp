#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace dcq::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kParseError = 2,
  kValidationError = 3,
  kBudgetExceeded = 4,
  kOracleMismatch = 5,
  kInternalError = 6,
};

/// Entry point of the `dcq` tool; args exclude the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace dcq::cli
