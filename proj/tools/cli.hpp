#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace eventify::cli {

/// Runs the command line `args` (without the program name). Returns 0 on
/// success or a passing check, 1 when a transform has no solution or a check
/// fails, and 2 on usage or input errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace eventify::cli
