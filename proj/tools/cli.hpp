#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace milnor::cli {

enum ExitCode : int {
  kSuccess = 0,
  kUsage = 1,
  kInvalidInput = 2,
  kHypothesisNotMet = 3,
};

// Runs the command line `args` (without the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace milnor::cli
