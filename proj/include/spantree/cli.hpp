#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace spantree::cli {

enum ExitCode : int {
  ok = 0,
  usage_error = 2,
  capability_exceeded = 3,
  exactness_failure = 4,
};

/// Runs the command line `args` (without the program name), writing results
/// to `out` and diagnostics to `err`. Returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace spantree::cli
