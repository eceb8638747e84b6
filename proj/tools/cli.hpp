#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace basilica::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;  // module error or failed verification
inline constexpr int kExitUsage = 2;

/// Runs the `basilica` command line. `args` excludes the program name.
/// The result (JSON, or CSV/DOT with --format) goes to `out`; usage
/// messages and verification summaries go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace basilica::cli
