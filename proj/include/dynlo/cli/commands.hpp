#pragma once

#include <cstdint>
#include <iosfwd>

#include "dynlo/cli/sweep.hpp"

namespace dynlo::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitValidation = 1,
  kExitIo = 2,
  kExitOracleFailure = 3,
};

/// Runs every experiment of the sweep and writes its result files into
/// spec.out_dir. Progress goes to `log`, diagnostics to `err`.
int run_command(const SweepSpec& spec, std::ostream& log, std::ostream& err);

/// Runs the built-in oracle checks, one PASS/FAIL line each.
int oracle_command(std::ostream& out, std::uint64_t seed = 20240601);

}  // namespace dynlo::cli
