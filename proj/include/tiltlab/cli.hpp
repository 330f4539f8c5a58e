#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace tiltlab {

// Exit codes of the command-line tool.
inline constexpr int kExitPass = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

// Runs the tool with the given arguments (program name excluded). Human
// output goes to `out`, diagnostics to `err`; JSON goes to the --json path.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace tiltlab
