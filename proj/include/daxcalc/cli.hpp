#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace daxcalc {

/// Exit codes of the command-line tool.
enum ExitCode : int {
    kExitOk = 0,
    kExitParseError = 1,
    kExitValidationError = 2,
};

/// Runs `daxcalc` with `args` (args[0] is the program name). Results go to
/// `out`, diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace daxcalc
