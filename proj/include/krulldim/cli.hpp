#pragma once

#include <ostream>

namespace krulldim {

/// Exit statuses of the command line tool.
inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitInputError = 2;

/// Entry point of the `krulldim` tool with its streams injected, so tests can
/// drive it in-process. Returns the process exit status.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace krulldim
