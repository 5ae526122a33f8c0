#pragma once

// `liecurve report | sweep | verify`.
// Exit codes: 0 success, 1 verification failure, 2 argument error, 3 I/O error.

#include <iosfwd>
#include <string>
#include <vector>

namespace liecurve {

enum ExitCode : int { kExitOk = 0, kExitVerifyFailed = 1, kExitUsage = 2, kExitIo = 3 };

/// Radians, or degrees written as "deg:<value>". "deg:90" maps to pi/2 exactly.
/// Throws std::invalid_argument on malformed input.
double parse_theta(const std::string& text);

/// `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace liecurve
