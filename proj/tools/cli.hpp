#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace nabext::cli {

enum ExitCode : int {
  kOk = 0,
  kCheckFailed = 1,
  kInputError = 2,
  kInternalError = 3,
};

/// Runs one command line (without the program name). Documents go to `out`
/// unless --output is given; diagnostics go to `err`.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

} // namespace nabext::cli
