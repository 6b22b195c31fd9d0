#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace secreg {

enum ExitCode { kExitOk = 0, kExitComputation = 1, kExitUsage = 2, kExitVerification = 3 };

// The secreg command line. args excludes the program name. Results go to
// `out` (or the -o file), progress and diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace secreg
