#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace locc::cli {

/// Process exit codes of locc-lab.
enum ExitCode : int {
  kOk = 0,
  kInputError = 2,
  kResourceCap = 3,
  kIoError = 4,
};

/// Runs the locc-lab command line. `args` excludes the program name.
/// `mem_cap` is the raw value of LOCC_LAB_MEM_CAP, if set.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        const std::optional<std::string>& mem_cap = std::nullopt);

}  // namespace locc::cli
