#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace kenmotsu::cli {

/// Runs the command line given argv-style arguments (without the program
/// name).  Returns the process exit code: 0 success, 1 mathematical
/// failure, 2 input error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace kenmotsu::cli
