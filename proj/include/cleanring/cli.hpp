#pragma once

#include <iosfwd>

namespace cleanring {

/// Exit codes of the command-line tool.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFalse = 1;  // a verdict is false or a law failed
inline constexpr int kExitUsage = 2;  // usage, parse, size or domain error

/// Runs `cleanring <command> ...`. Reports go to `out`, diagnostics to `err`.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace cleanring
