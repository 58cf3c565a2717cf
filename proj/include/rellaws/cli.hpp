#pragma once

#include <iosfwd>
#include <span>
#include <string>

namespace rellaws::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitMismatch = 1;
inline constexpr int kExitUsage = 2;

/// Runs one subcommand. `args` excludes the program name. Output goes to
/// `out`, diagnostics to `err`; returns the process exit status.
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace rellaws::cli
