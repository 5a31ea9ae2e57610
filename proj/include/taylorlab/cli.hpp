#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace taylorlab::cli {

enum ExitCode : int {
    exit_ok = 0,
    exit_invariant_failure = 1,
    exit_usage = 2,
    exit_numeric = 3,
};

/// Runs the command line `args` (without the program name). The report goes to
/// `out` or to the --out file, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace taylorlab::cli
