#pragma once

#include <iosfwd>

namespace idim::cli {

/// Exit statuses: all checks passed, some check failed, usage/input error.
enum ExitCode : int { kOk = 0, kCheckFailed = 1, kError = 2 };

/// Full command-line entry point; argv[0] is the program name.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace idim::cli
