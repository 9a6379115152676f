#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace lich {

// Exit codes of the command-line tool.
enum ExitCode : int { kExitOk = 0, kExitInput = 1, kExitMath = 2 };

// Runs one command line (args excludes the program name). Reports go to
// `out`, diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lich
