#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace witt::cli {

/// Exit codes: 0 every check passed, 1 a check failed, 2 usage or input error.
inline constexpr int kPass = 0;
inline constexpr int kCheckFailed = 1;
inline constexpr int kUsageError = 2;

/// Runs one command line (without the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace witt::cli
