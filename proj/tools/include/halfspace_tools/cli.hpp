#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace halfspace::tools {

enum ExitCode : int {
  kExitOk = 0,
  kExitConfig = 1,
  kExitNumeric = 2,
  kExitTrend = 3,
  kExitBudget = 4,
  kExitObstructed = 5,
};

/// Environment variable naming the default output directory.
inline constexpr const char* kOutputDirEnv = "HALFSPACE_OUTPUT_DIR";

/// Runs one subcommand; args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace halfspace::tools
