#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace netgof {

/// Exit codes of the command-line tool.
enum ExitCode : int { kExitOk = 0, kExitUsage = 1, kExitData = 2 };

/// Runs the `netgof` command line. `args` excludes the program name. JSON and
/// edge lists go to `out`; summaries, progress and errors go to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace netgof
