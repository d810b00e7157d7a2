#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace saxshape::cli {

/// Process exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUserError = 1;
inline constexpr int kExitInternalError = 2;

/// Runs the `saxshape` command line. `args` excludes the program name.
/// Results go to `out`; diagnostics and conflict reports go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace saxshape::cli
