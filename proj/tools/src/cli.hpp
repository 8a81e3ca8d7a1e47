#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace fuzzydist::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

/// Runs `fuzzydist <command> [flags]`; `args` excludes the program name.
/// Results go to `out` (or --out), diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Worker count for table sweeps: FUZZYDIST_THREADS if set and positive, else the
/// hardware concurrency.
unsigned worker_count();

}  // namespace fuzzydist::cli
