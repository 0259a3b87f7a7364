#pragma once

#include <iosfwd>
#include <span>
#include <string>

namespace circpow::cli {

enum ExitCode : int {
    kOk = 0,
    kValidationFailure = 1, // scan: a theorem check failed
    kUsage = 2,             // bad arguments or ranges
    kCompleteGraph = 3,     // the requested power is complete
    kEigenvalueAbsent = 4,  // basis requested for a missing eigenvalue
    kInternal = 5,          // non-convergence or an inconsistency
};

/// Environment variable holding the default scan thread count.
inline constexpr const char* kThreadsEnv = "CIRCPOW_THREADS";

/// Runs one command; `args` excludes the program name.
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

} // namespace circpow::cli
