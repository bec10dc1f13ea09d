#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace modp::cli {

// Exit codes shared by all subcommands.
inline constexpr int kExitOk = 0;
inline constexpr int kExitNo = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitUndecided = 3;

// Default largest m accepted by `table` without --force.
inline constexpr int kTableGuard = 9;

// Runs the command line `args` (without the program name).
int run(const std::vector<std::string> & args, std::ostream & out, std::ostream & err);

} // namespace modp::cli
