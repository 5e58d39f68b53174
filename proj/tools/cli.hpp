#pragma once

#include <iosfwd>

namespace wavelab::cli {

inline constexpr int exit_ok = 0;
inline constexpr int exit_check_failed = 1;
inline constexpr int exit_usage = 2;

/// Entry point of the `wavelab` tool with injectable streams:
///   run <config> [--output csv]     evolve, write CSV, report checks
///   verify <config>                  evolve, report checks only
///   sweep <config> --param gamma --values 1,2,4
///   oracle <curve> [--gamma g] [--t t] [--q0 q] [--p0 p] [--mass m]
/// Returns 0 when every check passes, 1 on failed checks or numerical
/// aborts, 2 on usage or configuration errors.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace wavelab::cli
