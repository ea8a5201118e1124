#pragma once

#include <iosfwd>

namespace infhom {

enum ExitCode : int { exit_ok = 0, exit_invalid = 1, exit_violation = 2, exit_cap = 3 };

/// Entry point of the command-line tool; all diagnostics go to err.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace infhom
