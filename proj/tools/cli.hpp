#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace sc2::cli {

enum ExitCode { kAffirmative = 0, kNegative = 1, kInconclusive = 2, kInputError = 3 };

/// Runs one command line. Reports go to `out`, diagnostics and usage to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sc2::cli
