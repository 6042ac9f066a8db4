#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace oscdual::cli {

enum ExitCode : int { pass = 0, certified_failure = 1, usage_error = 2 };

/// Runs one invocation. args excludes the program name. The JSON report goes to `out`
/// (or the --out file); diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Splits a command line into words, honouring single and double quotes.
std::vector<std::string> split_command_line(const std::string& line);

}  // namespace oscdual::cli
