#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace eulab::cli {

inline constexpr const char* kVersion = "0.1.0";

enum ExitCode : int { kOk = 0, kBoundFailed = 1, kUsage = 2 };

/// Runs one command line (without the program name). JSON goes to out,
/// diagnostics to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace eulab::cli
