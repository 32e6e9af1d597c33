#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace pwftap::cli {

/// Process exit statuses of the command-line tool.
enum ExitStatus : int {
    exit_ok = 0,
    exit_input_error = 2,
    exit_invariant_breach = 3,
};

/// Runs the tool on `args` (without the program name). The human-readable
/// summary goes to `out`, diagnostics to `err`; the JSON report is written to
/// the --out path when one is given.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace pwftap::cli
