#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace severi {

// Exit codes: 0 success, 1 usage, 2 domain error, 3 internal consistency.
enum ExitCode : int { kExitOk = 0, kExitUsage = 1, kExitDomain = 2, kExitInternal = 3 };

// Runs the command line (without the program name) and returns its exit code.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace severi
