#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace oodlsp::cli {

enum ExitStatus : int {
  kOk = 0,
  kUsageError = 1,
  kParseError = 2,
  kModelError = 3,
};

/// Runs one command line. `args` excludes the program name. Normal output
/// goes to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace oodlsp::cli
