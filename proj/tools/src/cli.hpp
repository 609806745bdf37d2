#pragma once

#include <exception>
#include <ostream>
#include <string>
#include <vector>

namespace mtdual::cli {

/// Exit codes of the command line tool.
enum ExitCode : int { kOk = 0, kParseError = 1, kPreconditionError = 2, kInvariantError = 3 };

/// Prints the error and maps it to an exit code.
int report_exception(std::exception_ptr error, std::ostream& err);

/// Runs one command. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mtdual::cli
