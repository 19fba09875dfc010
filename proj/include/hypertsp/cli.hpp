#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hypertsp {

/// Exit codes of the command-line tool.
enum ExitCode : int {
    kExitOk = 0,
    kExitFailure = 1,
    kExitCap = 2,
    kExitParse = 3,
    kExitDensity = 4,
};

/// Runs the tool with `args` (without the program name).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace hypertsp
