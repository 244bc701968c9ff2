#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace gtkey {

/// Exit status: 0 success, 1 usage or input error, 2 mathematical violation or mismatch.
enum ExitCode { exit_ok = 0, exit_usage = 1, exit_violation = 2 };

/// Runs the command line (without the program name). Reports go to out, diagnostics to err.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gtkey
