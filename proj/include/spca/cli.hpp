#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace spca {

/// Exit codes of the command-line front end.
enum ExitCode : int { kExitOk = 0, kExitParameter = 2, kExitNumerical = 3 };

/// Runs one subcommand (`estimate`, `rate`, `clique`, `audit`). `args` excludes
/// the program name. Human-readable output goes to `out`, diagnostics and
/// usage text to `err`; CSV files go to the output directory.
int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Environment variable naming the default output directory.
inline constexpr const char* kOutputDirEnv = "SPCA_OUTPUT_DIR";

}  // namespace spca
