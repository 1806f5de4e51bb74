#pragma once

#include <iosfwd>

#include "pedoe/error.hpp"

namespace pedoe::cli {

/// Exit codes of the command-line tool.
enum ExitCode : int {
  kSuccess = 0,
  kNoRealSolution = 1,
  kInputError = 2,
  kDegenerate = 3,
};

ExitCode exit_code_for(ErrorKind kind);

/// Entry point of the `pedoe` tool, with the streams injectable for tests.
///
///   pedoe [--tol T] [--dim N] [--json] <subcommand> <in.json> ...
///     verify       gram, inertia, realizability verdict, master residual
///     solve        complete a configuration from the job's constraint row
///     apollonius   [--signs +++|all]
///     descartes    Soddy circles of a tangent triple
///     orthocircle  circle orthogonal to a tangent triple
///     gasket       --max-curvature K
///     render       -o out.svg [--width W]
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace pedoe::cli
