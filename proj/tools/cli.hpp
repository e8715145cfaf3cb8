#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace stsys::cli {

/// Exit codes of the `stsys` tool.
inline constexpr int kOk = 0;
inline constexpr int kAssertionFailed = 1;
inline constexpr int kInputError = 2;  // malformed input, failed precondition, inapplicable law

/// Runs the tool on argv-style arguments (args[0] is the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace stsys::cli
