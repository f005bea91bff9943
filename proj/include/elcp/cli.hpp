// elcp - Extended Lorentz Cone Projections
// Copyright 2026 elcp Contributors
// Licensed under Apache 2.0

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace elcp {

// Process exit codes. Fixed; scripts may rely on them.
enum ExitCode : int {
  kExitOk = 0,            // solve converged / every check passed
  kExitNotConverged = 1,  // solver finished without reaching the residual tolerance
  kExitInputError = 2,    // unreadable or malformed problem input
  kExitCheckFailure = 3,  // a verification or reproduction row failed
  kExitUsage = 4,         // bad flags or arguments
};

// Runs the command-line front-end on `args` (without the program name).
// All output is written to the given streams; the return value is an ExitCode.
// Output is deterministic for fixed inputs and seed.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace elcp
