// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace chshkit::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

/// Runs one chshkit invocation. `args` excludes the program name. Reports go
/// to `out`, diagnostics to `err`. Returns 0 on success (including checks
/// that find a violation), 1 on operational failures such as unreadable
/// files or infeasible requests, and 2 on usage errors.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace chshkit::cli
