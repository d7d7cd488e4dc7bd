#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ordlines::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitGuaranteeFailed = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitInternal = 3;

/// Runs the ordlines command line. `args` excludes the program name.
/// Reports go to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ordlines::cli
