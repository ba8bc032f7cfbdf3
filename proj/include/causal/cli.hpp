// Command-line front end. run() is the whole CLI so tests can drive it
// in-process; tools/main.cpp is a thin wrapper.
//
// Exit codes: 0 success or true verdict, 1 false verdict, 2 usage error,
// 3 parse/validation error, 4 budget exceeded.

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace causal::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFalse = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitParse = 3;
inline constexpr int kExitBudget = 4;

// args excludes the program name. use_color enables ANSI markers on the
// output stream (the wrapper passes isatty && !NO_COLOR).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        bool use_color = false);

}  // namespace causal::cli
