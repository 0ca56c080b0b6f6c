#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace morrey::cli {

/// Runs one subcommand. args excludes the program name. Writes the
/// serialized run record to out and diagnostics to err. Exit codes:
/// 0 success, 1 argument errors, 2 numerical non-convergence.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace morrey::cli
