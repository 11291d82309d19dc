#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace sl2::cli {

inline constexpr const char* kVersion = "0.1.0";

enum ExitStatus : int { kOk = 0, kCheckFailed = 1, kUsage = 2 };

/// Runs one command line (without the program name) and returns the exit status.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sl2::cli
