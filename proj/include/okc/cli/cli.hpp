#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace okc::cli {

/// Exit codes: every check passed, a mathematical identity failed, bad
/// input or usage.
enum ExitCode : int { kOk = 0, kIdentityFailed = 1, kUsage = 2 };

/// Default caps on truncation orders; OKC_MAX_TRUNC raises them.
inline constexpr int kMaxLazardDegree = 8;
inline constexpr int kLazardWarnAbove = 6;
inline constexpr int kMaxSeriesTrunc = 16;

/// Runs the command line `args` (without the program name). Reports go to
/// `out`, diagnostics and warnings to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace okc::cli
