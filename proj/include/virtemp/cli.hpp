#pragma once

#include <iosfwd>

namespace virtemp::cli {

/// Exit codes of the virtemp executable.
inline constexpr int kExitOk = 0;
inline constexpr int kExitValidation = 1;
inline constexpr int kExitIo = 2;

/// Entry point behind `virtemp <analyze|compare-vt|heatflow|otto|sweep>`.
/// Writes reports to `out` and diagnostics to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace virtemp::cli
