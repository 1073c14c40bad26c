#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace threshspec::cli {

enum ExitCode : int {
  kSuccess = 0,
  kUsageError = 1,
  kDomainRejection = 2,
};

/// Runs one command. `args` excludes the program name. Results go to
/// `out`, diagnostics to `err`; `in` feeds `recognize` when no graph6
/// argument is given.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

/// THRESHSPEC_WORKERS if set to a positive integer, otherwise the
/// hardware concurrency (at least 1).
unsigned default_workers();

}  // namespace threshspec::cli
