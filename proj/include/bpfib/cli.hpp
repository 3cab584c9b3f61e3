#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace bpfib::cli {

/// Exit codes: 0 success (for `verify`, no FAIL), 1 parameter or degenerate
/// input, 2 usage error.
enum ExitCode : int { exit_ok = 0, exit_parameter = 1, exit_usage = 2 };

/// Runs one command line. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace bpfib::cli
