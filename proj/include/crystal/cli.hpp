#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace crystal::cli {

inline constexpr int exit_ok = 0;
inline constexpr int exit_failure = 1;
inline constexpr int exit_usage = 2;

/// Runs one command line (args excludes the program name). Results go to
/// out, diagnostics to err; returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace crystal::cli
