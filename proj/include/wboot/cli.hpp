#pragma once

#include <string>
#include <vector>

namespace wboot::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;  ///< unexpected error, output I/O
inline constexpr int kExitUsage = 2;    ///< malformed flags, flag/data mismatch
inline constexpr int kExitData = 3;     ///< unreadable or invalid data file
inline constexpr int kExitEmpty = 4;    ///< run: no finite replicate; bench: every cell failed

/// `run`: bootstrap one dataset, optionally write a replicates CSV
/// (`replicate_index,value`), print a one-line summary to stdout.
int cmd_run(const std::vector<std::string>& args);

/// `bench`: time the vectorized engine against the resampling baseline over
/// an (N, B) grid; writes a timing CSV and a companion `<stem>_ratio` CSV.
int cmd_bench(const std::vector<std::string>& args);

/// First argument selects the subcommand. Returns an exit code, never throws.
int dispatch(const std::vector<std::string>& args);

}  // namespace wboot::cli
