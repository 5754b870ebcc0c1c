#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace msk::cli {

/// Exit codes: 0 success, 1 domain rejection, 2 malformed input or usage error.
enum ExitCode : int { kOk = 0, kRejected = 1, kMalformed = 2 };

/// Runs one command; `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace msk::cli
