#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace wat {

/// Exit codes of the command line tool.
enum ExitCode : int {
  kExitPositive = 0,  ///< success or positive verdict
  kExitNegative = 1,  ///< negative verdict
  kExitInput = 2,     ///< bad arguments or input files
  kExitResource = 3,  ///< a size cap was hit
};

/// Runs one command. `args` excludes the program name. Reports go to `out`,
/// diagnostics and usage to `err`.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace wat
