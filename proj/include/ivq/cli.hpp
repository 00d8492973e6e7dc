#pragma once

#include <iosfwd>

#include "ivq/error.hpp"

namespace ivq {

/// Process exit codes of the command-line front end.
enum ExitCode : int {
    kExitOk = 0,
    kExitGoldenFailed = 1,
    kExitInvalidInput = 2,
    kExitBadQ = 3,
    kExitBadMeasure = 4,
};

int exit_code_for(ErrorKind kind);

/// Runs the `ivqc` command line with the given arguments (argv[0] is the
/// program name). The report goes to `out`, diagnostics to `err`.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace ivq
