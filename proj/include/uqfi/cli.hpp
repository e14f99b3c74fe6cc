#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace uqfi {

enum ExitCode : int {
  kExitOk = 0,
  kExitValidation = 1,
  kExitVerification = 2,
  kExitIo = 3,
};

/// Runs the command line `args` (without the program name). Results go to
/// `out`, diagnostics to `err`. Returns one of ExitCode.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace uqfi
