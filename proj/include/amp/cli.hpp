#pragma once

namespace amp {

// Full command-line entry point: parses argv, dispatches the subcommand and
// returns the process exit code (0 success, 1 numeric/internal error,
// 2 configuration or usage error).
int run_cli(int argc, const char* const* argv);

}  // namespace amp
