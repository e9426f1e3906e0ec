#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace raypf::cli {

enum ExitStatus : int { kAllPassed = 0, kCheckFailed = 1, kUsageError = 2 };

/// Runs one subcommand. `args` excludes the program name. Primary output goes
/// to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace raypf::cli
