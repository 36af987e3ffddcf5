#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace corec::cli {

inline constexpr int exit_ok = 0;
inline constexpr int exit_usage = 1;
inline constexpr int exit_compute = 2;

/// Runs one invocation; args excludes the program name. Output is buffered
/// and written to `out` only when the command succeeds.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace corec::cli
