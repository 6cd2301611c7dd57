#pragma once

#include <iosfwd>

namespace gl2::cli {

/// Exit codes of run().
inline constexpr int kOk = 0;
inline constexpr int kVerificationFailed = 1;
inline constexpr int kUsageError = 2;

/// Parses argv, dispatches the subcommand and writes its report to `out`
/// (or to the --out path). Diagnostics go to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);
int run(int argc, const char* const* argv);

}  // namespace gl2::cli
