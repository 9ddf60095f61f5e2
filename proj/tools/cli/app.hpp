#pragma once

#include <iosfwd>

namespace cubegauss::cli {

/// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kVerifyFailed = 1;
inline constexpr int kUsage = 2;
inline constexpr int kTolerance = 3;

/// Environment variable naming the directory that relative --output paths
/// are resolved against.
inline constexpr const char* kOutputDirEnv = "CUBEGAUSS_OUTPUT_DIR";

/// Parses argv and runs one subcommand. Tables go to `out` (or the --output
/// file), diagnostics to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace cubegauss::cli
