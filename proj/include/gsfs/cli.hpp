#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace gsfs::cli {

/// Exit statuses: affirmative answer, negative answer or validation failure,
/// usage or parse error.
enum ExitStatus : int { kSuccess = 0, kNegative = 1, kUsage = 2 };

/// Runs one command line (`args` excludes the program name). Renderings and
/// counts go to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace gsfs::cli
