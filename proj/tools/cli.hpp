#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace orchard::cli {

enum ExitCode : int { ok = 0, usage_error = 2, invariant_error = 3 };

/// Runs the command line `args` (without the program name), writing primary
/// output to `out` and diagnostics to `err`. Returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace orchard::cli
