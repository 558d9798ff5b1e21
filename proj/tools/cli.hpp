#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ore::cli {

/// Runs one command line (without the program name). Exit codes: 0 on
/// success, 1 for a negative answer under --strict (and for failing worked
/// examples), 2 for usage, parse and library errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Splits a batch line into arguments; double quotes group, backslash escapes.
std::vector<std::string> split_command_line(const std::string& line);

}  // namespace ore::cli
