#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cellembed::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFalse = 1;
inline constexpr int kExitUsage = 2;

/// Runs one command line. `args` includes the program name. Returns 0 on
/// success or a true answer, 1 on a false answer or failed verification,
/// 2 on usage errors, bad permutations and exceeded guards.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cellembed::cli
