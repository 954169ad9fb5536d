#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace tiso::cli {

inline constexpr int exit_ok = 0;
inline constexpr int exit_usage = 2;
inline constexpr int exit_numerical = 3;

/// Runs the command line `args` (without the program name). Results go to
/// `out`, diagnostics to `err`; returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace tiso::cli
