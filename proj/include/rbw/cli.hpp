#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace rbw::cli {

enum ExitCode : int {
  kOk = 0,
  kValidationError = 1,  // bad usage, unreadable or structurally invalid input
  kContractViolation = 2,  // a numerical check exceeded its tolerance
};

/// Runs one subcommand. args excludes the program name.
int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace rbw::cli
