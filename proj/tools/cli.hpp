#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace wfano::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kCheckFailed = 1;
inline constexpr int kUsage = 2;

// Runs the command line given as argv[1..] (program name excluded). Normal
// output goes to out unless --out names a file; diagnostics go to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace wfano::cli
