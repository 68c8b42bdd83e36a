#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace fredombi::cli {

// Exit statuses shared by every subcommand.
inline constexpr int kExitOk = 0;          // success / feasible
inline constexpr int kExitInfeasible = 1;  // infeasible system or failed check
inline constexpr int kExitUsage = 2;       // usage, parse or validation error
inline constexpr int kExitCapExceeded = 3; // candidate cap exceeded

/// Dispatches one command line (without the program name). Reports go to
/// `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace fredombi::cli
