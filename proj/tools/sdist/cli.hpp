#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace sdist::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitHypothesis = 1;
inline constexpr int kExitInput = 2;
inline constexpr int kExitInternal = 3;

/// Runs one sdist command. `args` excludes the program name. The JSON
/// report goes to `out`, a one-line human summary and diagnostics to `err`.
///
/// Exit codes: 0 success, 1 a mathematical hypothesis or check failed,
/// 2 bad input (options, files, parse errors), 3 internal error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sdist::cli
