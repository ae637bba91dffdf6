#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace harmlike::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;

// Environment variable naming the directory that relative --output paths
// are resolved against.
inline constexpr const char* kOutputDirEnv = "HARMLIKE_OUTPUT_DIR";

// Runs the command line `args` (without the program name). Results go to
// `out` unless --output is given; diagnostics go to `err`.
int run(std::vector<std::string> args, std::ostream& out, std::ostream& err);

} // namespace harmlike::cli
