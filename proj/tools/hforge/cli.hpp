#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hforge::cli {

enum ExitCode : int { kOk = 0, kIdentityFailure = 1, kUsage = 2 };

/// Runs `hforge <args...>` (args exclude the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hforge::cli
