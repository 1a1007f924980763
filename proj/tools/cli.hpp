#pragma once

#include <iosfwd>

namespace paley::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInternal = 1;
inline constexpr int kExitPrecondition = 2;
inline constexpr int kExitViolation = 3;
inline constexpr int kExitTimeout = 4;

/// Runs one command line. Reports go to out, diagnostics to err.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace paley::cli
