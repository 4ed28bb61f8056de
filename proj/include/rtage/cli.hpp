#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace rtage {

/// Exit codes of the command-line driver.
enum ExitCode : int { kExitOk = 0, kExitUsage = 2, kExitViolation = 3, kExitOracle = 4 };

/// Runs the driver on argv-style arguments (args[0] is the program name).
/// The report goes to `out` unless --out is given; diagnostics go to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace rtage
