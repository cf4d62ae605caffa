#pragma once

#include <iosfwd>

namespace tauhh {

/// Exit status of the command line front end.
enum ExitCode : int { kExitOk = 0, kExitInput = 1, kExitFailure = 2 };

/// Runs the tauhh command line: check, ext, hh, tau, rsq and classify on a
/// presentation file. Reports go to out, diagnostics to err.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace tauhh
