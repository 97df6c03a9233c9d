#pragma once

#include <ostream>

namespace paireddom::cli {

inline constexpr int exit_ok = 0;
inline constexpr int exit_precondition = 2;
inline constexpr int exit_discrepancy = 3;

/// Entry point shared by the executable and the tests. Never throws; every
/// failure is mapped onto an exit code and (with --json) an error object.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace paireddom::cli
