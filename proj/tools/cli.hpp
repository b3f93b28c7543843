#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace triaco::cli {

/// Runs one command line (args[0] is the program name).
/// Exit codes: 0 success or property holds, 1 property fails, 2 bad input.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace triaco::cli
