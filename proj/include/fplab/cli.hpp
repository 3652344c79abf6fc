#ifndef FPLAB_CLI_HPP
#define FPLAB_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace fplab::cli {

enum ExitCode : int { ok = 0, input_error = 2, invariant_violation = 3 };

/// Runs the command line `args` (without the program name). Output goes to
/// `out`, diagnostics to `err`. Returns one of ExitCode.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace fplab::cli

#endif  // FPLAB_CLI_HPP
