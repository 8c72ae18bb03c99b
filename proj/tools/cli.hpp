#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace kdim {

/// Exit codes of the command-line tool.
enum ExitCode : int {
  kExitOk = 0,
  kExitError = 1,
  kExitParse = 2,
  kExitUnknownAtom = 3,
  kExitMissingSym = 4,
  kExitMissingMeasure = 5,
};

/// Run one command; `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace kdim
