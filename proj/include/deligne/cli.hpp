#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace deligne::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerificationFailed = 1;
inline constexpr int kExitUsage = 2;

/// Runs one command; `args` excludes the program name. Usage errors (unknown
/// flags, malformed partitions, unreadable input) are reported on `err`
/// before any computation and return kExitUsage.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace deligne::cli
