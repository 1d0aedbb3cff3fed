#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace pmob::cli {

enum ExitCode : int {
  kOk = 0,
  kToolError = 1,
  kUsage = 2,
  kViolations = 3,
};

/// Runs one command line (without the program name). Results go to `out`
/// unless --out redirects them; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace pmob::cli
