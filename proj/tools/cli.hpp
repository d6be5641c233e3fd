#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace rrcolor::cli {

enum ExitCode : int { success = 0, verification_failed = 1, usage_error = 2 };

/// Runs the command line front end on `args` (program name excluded).
/// Output that would go to standard output is written to `out` unless an
/// --output path is given.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace rrcolor::cli
