#pragma once

#include <ostream>

namespace ellimod::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kUsage = 1;
inline constexpr int kValidation = 2;
inline constexpr int kVerifyFailed = 3;

// Runs one command line (argv[0] is the program name). JSON goes to `out`,
// diagnostics and progress to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace ellimod::cli
