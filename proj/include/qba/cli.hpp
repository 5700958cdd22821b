#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qba {

/// Exit codes of the command-line tool.
enum ExitCode : int { kExitOk = 0, kExitNo = 1, kExitUsage = 2 };

/// Runs the command line `args` (args[0] is the program name) and returns the exit code.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err);

}  // namespace qba
