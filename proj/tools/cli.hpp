#pragma once

#include <iosfwd>

namespace loopenergy::cli {

/// Exit codes: 0 success, 1 verification violations, 2 usage or parse
/// error, 3 numeric failure.
enum ExitCode : int { kOk = 0, kViolations = 1, kUsage = 2, kNumeric = 3 };

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace loopenergy::cli
