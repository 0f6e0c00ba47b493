#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace icode::cli {

enum ExitCode : int {
    kOk = 0,
    kInvalidInput = 1,
    kBudgetExceeded = 2,
    kUnresolved = 3,
    kVerificationFailed = 4,
};

/// Runs the command line `args` (program name first). Reports go to `out`,
/// diagnostics and warnings to `err`. Returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace icode::cli
