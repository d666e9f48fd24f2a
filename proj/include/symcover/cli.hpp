#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace symcover {

inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;

/// Runs the command line `args` (without the program name). Returns the exit
/// code: 0 on success, 1 when a verification check fails, 2 on usage or I/O
/// errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace symcover
