#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace mmph::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInputError = 1;
inline constexpr int kExitIndeterminate = 2;

/// Runs one command line (without the program name). Reports go to `out`,
/// diagnostics and usage to `err`. Returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace mmph::cli
