#pragma once

#include <ostream>

namespace skewbrace::cli {

/// Runs the command-line front end. Exit codes: 0 success, 1 validation
/// failure or failed reproduction, 2 I/O, parse or usage error.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace skewbrace::cli
