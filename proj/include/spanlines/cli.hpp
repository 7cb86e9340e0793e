#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace spanlines::cli {

// Exit codes.
inline constexpr int kSuccess = 0;
inline constexpr int kUsageOrIoError = 1;
inline constexpr int kProvenInequalityViolated = 2;

/// Runs the command line (args excludes the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace spanlines::cli
