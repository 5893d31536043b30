#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace sym2chab::cli {

enum ExitCode : int { kSuccess = 0, kMathFailure = 1, kUsageError = 2 };

/// Runs one command line (args excludes the program name). Reports go to out, diagnostics to err.
int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sym2chab::cli
