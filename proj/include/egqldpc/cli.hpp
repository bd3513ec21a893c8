#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace egqldpc::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitRefuted = 2;
inline constexpr int kExitUnverified = 3;
inline constexpr int kExitUsage = 64;
inline constexpr int kExitConstruction = 65;
inline constexpr int kExitSizeCap = 66;

// Runs one command line (program name excluded) against the given streams and
// returns the process exit status.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace egqldpc::cli
