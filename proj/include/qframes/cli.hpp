#pragma once

#include <iosfwd>

namespace qframes::cli {

/// Process exit codes of the qframes tool.
enum ExitCode : int {
  kOk = 0,
  kParseError = 1,         // unreadable or malformed input, bad arguments
  kDimensionMismatch = 2,  // a vector does not live in the declared H^n
  kRejected = 3,           // not a frame / not a Riesz basis or sequence
  kNumericalFailure = 4,   // singular system, non-convergence, dual cross-check failure
};

/// Runs one command line. Every outcome, including errors, writes a JSON
/// document to `out`; diagnostics go to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace qframes::cli
