#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace torusfan {

/// Exit status of the command line tool.
enum ExitCode : int { kOk = 0, kInputError = 1, kVerificationFailed = 2 };

/// args[0] is the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace torusfan
