#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace orbiquant::cli {

/// Exit codes: 0 success, 2 usage error, 3 domain error.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitDomain = 3;

/// Runs one command line (without the program name). JSON or CSV goes to
/// `out`, a single "error: <CODE>: <detail>" line to `err` on failure.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace orbiquant::cli
