#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace knotepi::cli {

// Exit codes
inline constexpr int kOk = 0;
inline constexpr int kFalse = 1;         // computed answer is negative
inline constexpr int kUsage = 2;         // bad arguments or literals
inline constexpr int kUndetermined = 3;  // necessary conditions hold, existence open

// Runs one command line (args excludes the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace knotepi::cli
