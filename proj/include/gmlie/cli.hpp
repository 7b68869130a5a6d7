#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace gmlie {

/// Exit codes of the command-line tool.
enum ExitCode : int {
    kExitOk = 0,
    kExitUsage = 1,
    kExitNotLie = 2,
    kExitInconsistent = 3,
};

/// Runs the command line `args` (without the program name). `in` serves the
/// "-" arguments.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, std::istream& in);

} // namespace gmlie
