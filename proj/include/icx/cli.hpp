#pragma once

// Batch command-line front end. One verb per invocation, JSON on stdout.

#include <ostream>
#include <string>
#include <vector>

namespace icx::cli {

enum ExitCode : int { ok = 0, verdict = 1, usage = 2, budget = 3 };

/// `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace icx::cli
