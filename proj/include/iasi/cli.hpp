#pragma once

#include <iosfwd>
#include <span>
#include <string>

namespace iasi::cli {

inline constexpr int exit_success = 0;
inline constexpr int exit_verification_failed = 1;
inline constexpr int exit_usage = 2;
inline constexpr int exit_infeasible = 3;

/// Runs one command line (args[0] is the program name). Output goes to `out`
/// unless --out names a file; diagnostics go to `err`.
auto run(std::span<const std::string> args, std::ostream & out, std::ostream & err) -> int;

}
