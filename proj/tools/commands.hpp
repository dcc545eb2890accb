#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace spacs::cli {

enum ExitCode : int {
  exit_ok = 0,
  exit_check_failed = 1,
  exit_usage = 2,
  exit_numeric = 3,
};

/// Parallelism for sweeps: hardware concurrency, capped by SPACS_THREADS
/// when that is set to a positive integer.
unsigned thread_count_from_env();

/// Runs the command line `args` (without the program name). Records go to
/// `out` (or to --out), diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace spacs::cli
