#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace tsilab {

inline constexpr const char* kVersion = "0.1.0";

/// Runs the command-line interface on the given arguments (argv[0] excluded).
/// Returns the process exit code: 0 on success, 2 for input validation
/// problems (including unknown flags), 1 for internal invariant violations.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace tsilab
