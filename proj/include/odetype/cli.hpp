#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace odetype {

/// Exit statuses of the command-line tool.
enum ExitCode : int { kExitVerdict = 0, kExitInternal = 1, kExitInput = 2, kExitPrecondition = 3 };

std::string tool_version();

/// Runs one command line (without the program name). The certificate or
/// pretty report goes to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace odetype
