#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace crn {

// Exit codes of the `crn` tool.
enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 1,
  kExitInternal = 2,
  kExitNegative = 3,
};

// Runs `crn <subcommand> <file> [flags]`. args[0] is the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace crn
