#pragma once

#include <iosfwd>

namespace norbit::cli {

/// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kUsage = 1;
inline constexpr int kDiscrepancy = 2;

/// Parses argv and dispatches to the library. Normal output goes to `out`,
/// diagnostics and usage to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace norbit::cli
