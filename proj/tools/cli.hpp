#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace sympow::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

/// Parses `args` (args[0] is the program name), runs one command and writes
/// its report to `out` or to --out. Diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sympow::cli
