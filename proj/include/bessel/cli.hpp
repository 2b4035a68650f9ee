#ifndef BESSEL_CLI_HPP_
#define BESSEL_CLI_HPP_

#include <ostream>
#include <string>
#include <vector>

namespace bessel {

enum ExitCode : int {
  kExitOk = 0,
  kExitDisagreement = 1,
  kExitInvalidArguments = 2,
  kExitConvergenceFailure = 3,
};

/// Runs one command. `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace bessel

#endif  // BESSEL_CLI_HPP_
