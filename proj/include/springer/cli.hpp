#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace springer {

/// Runs a CLI invocation (argument list without the program name).
/// Exit codes: 0 success, 1 verification failure, 2 malformed input.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace springer
