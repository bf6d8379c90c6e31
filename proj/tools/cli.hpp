#pragma once

#include <ostream>

namespace morsespec::cli {

enum ExitCode : int { kOk = 0, kPropertyFailure = 1, kInputError = 2 };

/// Runs one command line. The JSON report goes to out, diagnostics to err.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace morsespec::cli
