#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace bsac::cli {

enum ExitCode : int {
    kOk = 0,
    kAuditViolation = 1,
    kUsage = 2,
    kBudget = 3,
};

/// Runs one command. `args` excludes the program name. Reports go to `out`;
/// errors are a single JSON line on `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace bsac::cli
