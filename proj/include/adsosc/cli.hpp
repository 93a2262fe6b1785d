#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace adsosc::cli {

enum ExitCode : int { kSuccess = 0, kUsageError = 1, kNumericFailure = 2 };

/// Runs the command line `args` (without the program name). Tables go to
/// `out` unless --output names a file; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Reads a flat key=value file ('#' starts a comment line) into
/// "--key value" tokens.
std::vector<std::string> config_tokens(const std::string& path);

}  // namespace adsosc::cli
