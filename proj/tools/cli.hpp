#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace trider::cli {

enum ExitCode : int { pass = 0, check_failed = 1, input_error = 2 };

/// Runs one invocation. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace trider::cli
