#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace abelcay::cli {

// Process exit codes.
enum ExitCode : int {
  kOk = 0,
  kUsageError = 1,  // parse or domain error
  kSingular = 2,
  kNotGenerating = 3,
  kBudgetExceeded = 4,
};

/// Runs one CLI invocation; `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace abelcay::cli
