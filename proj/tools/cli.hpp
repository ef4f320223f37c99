#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace limiter::cli {

enum ExitCode : int { kOk = 0, kDomain = 1, kSyntax = 2 };

/// Runs one command line (args excludes the program name). Normal output
/// goes to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace limiter::cli
