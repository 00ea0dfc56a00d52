#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace naimark::cli {

/// Process exit statuses.
enum ExitCode : int {
  kOk = 0,
  kCheckFailed = 1,
  kUsageError = 2,
  kParseError = 3,
};

/// Runs the command line `args` (without the program name). JSON results go
/// to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Default tolerance: NAIMARK_TOL if set and parseable, otherwise `fallback`.
double default_tolerance(double fallback);

}  // namespace naimark::cli
