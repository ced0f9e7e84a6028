#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace combpoly::cli {

/// Exit codes of run().
inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;

/// Runs one command line. `args` excludes the program name, e.g.
/// {"compute", "--family", "R", "--n", "4"}. Results go to `out`,
/// diagnostics and usage text to `err`.
///
///   compute --family F --n N [--method M] [--format text|json|csv]
///   det     --variant V --n N [--target F] [--format ...]
///   verify  [--suite LIST] [--max-n N] [--strict-flags] [--timings] [--format ...]
///   table   --family F --rows N [--format ...]
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace combpoly::cli
