#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace bck {

/// Exit codes of the command-line tool.
enum ExitCode : int {
    kExitOk = 0,
    kExitDomainError = 1,
    kExitUsageError = 2,
};

/// Runs the `bck` command line; `args` excludes the program name.
/// Normal output goes to `out`, diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace bck
