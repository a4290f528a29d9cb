#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace shallowcast::cli {

enum ExitCode : int {
  kOk = 0,
  kUnsustainable = 1,
  kInputError = 2,
  kVerificationFailed = 3,
  kSimulationFailed = 4,
};

/// Runs one command line; args[0] is the program name. Never throws.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace shallowcast::cli
