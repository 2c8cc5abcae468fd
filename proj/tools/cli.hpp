#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace wittjet {

/// 0 pass, 1 verification failure, 2 cap, 3 integrality violation, 4 usage error.
enum ExitCode : int { kExitPass = 0, kExitFail = 1, kExitCap = 2, kExitIntegrality = 3, kExitUsage = 4 };

/// Runs the command line `args` (without the program name).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace wittjet
