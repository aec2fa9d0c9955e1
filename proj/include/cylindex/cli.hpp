#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "cylindex/verify.hpp"

namespace cylindex {

/// Process exit codes of the command-line front end.
enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 1,
  kExitVerifyFailed = 2,
  kExitNonFredholm = 3,
  kExitIndeterminate = 4,
};

/// Runs the CLI on `args` (without the program name). Reports go to `out`, diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Same, with the context used by the verify subcommand.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
            const VerifyContext& verify_context);

}  // namespace cylindex
