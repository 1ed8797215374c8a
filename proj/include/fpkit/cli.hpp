#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace fpkit::cli {

enum ExitCode : int {
  kSuccess = 0,
  kSemanticFailure = 1,
  kInvalidInput = 2,
};

// Runs one command line (args[0] is the program name). Reports go to `out`,
// diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace fpkit::cli
