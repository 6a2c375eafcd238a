#pragma once

namespace gravent::cli {

/// Exit statuses of the `gravent` executable.
enum ExitCode : int {
  kSuccess = 0,
  kInvalidParameters = 2,
  kSolverFailure = 3,
  kNoEntanglement = 4,
};

/// Parses argv, runs one subcommand and writes its record. Never throws;
/// errors are reported on stderr and mapped to an ExitCode.
int run(int argc, char** argv);

}  // namespace gravent::cli
