#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace omegat::cli {

/// Exit statuses.
inline constexpr int kOk = 0;
inline constexpr int kFailed = 1;    // fuzz found a disagreement, verify rejected
inline constexpr int kUsage = 2;     // parse, format or usage error
inline constexpr int kInternal = 3;  // internal invariant violation

/// Runs one command; `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace omegat::cli
