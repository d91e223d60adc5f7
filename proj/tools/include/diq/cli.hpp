#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace diq::cli {

enum ExitCode : int { ok = 0, negative = 1, usage = 2, budget = 3 };

/// Runs the command line `args` (without the program name). Results go to
/// `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace diq::cli
