#pragma once

#include <iosfwd>
#include <span>
#include <string>

#include "dimjac/errors.hpp"

namespace dimjac::cli {

/// Exit codes: 0 ok, 2 dimension, 3 parse, 4 structural or domain, 5 I/O.
/// A failing selftest exits with 1.
inline constexpr int kExitOk = 0;
inline constexpr int kExitSelftestFailed = 1;
inline constexpr int kExitDimension = 2;
inline constexpr int kExitParse = 3;
inline constexpr int kExitStructural = 4;
inline constexpr int kExitIo = 5;

int exit_code(ErrorKind kind);

/// Runs the dimjac command line on `args` (without the program name),
/// writing results to `out` and diagnostics to `err`.
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace dimjac::cli
