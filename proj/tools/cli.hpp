#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace fde::cli {

/// Exit codes shared by every subcommand.
enum ExitCode : int {
    kSuccess = 0,      // solvable / command succeeded
    kNegative = 1,     // negative mathematical verdict (not solvable, singular, no convergence)
    kUsage = 2,        // usage, parse or domain error
    kIoError = 3,
};

/// Runs the command line (args excludes the program name) and returns the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace fde::cli
