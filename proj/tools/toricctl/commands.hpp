#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace toricctl {

enum ExitCode : int {
  kPass = 0,
  kCheckFailed = 1,
  kInputError = 2,
};

/// Runs one toricctl invocation. args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace toricctl
