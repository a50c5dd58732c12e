#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace oqf::cli {

enum ExitCode : int {
  kOk = 0,
  kInternal = 1,
  kUsage = 2,       // bad flags or parameters outside a precondition
  kValidation = 3,  // malformed or inconsistent input data
  kIo = 4,
  kVerifyFailed = 5,
};

/// Runs the `oqf` command line. Output that is not written to files goes to
/// `out`; diagnostics go to `err`. Never throws.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace oqf::cli
