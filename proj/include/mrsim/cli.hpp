#pragma once

namespace mrsim::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitConfig = 2;     // malformed config / arguments
inline constexpr int kExitNumerical = 3;  // numerical abort mid-run
inline constexpr int kExitVerdict = 4;    // experiment ran but its check failed

/// Parse arguments, dispatch the subcommand, write artifacts, return the
/// exit code.  Never throws.
int run(int argc, const char* const* argv);

}  // namespace mrsim::cli
