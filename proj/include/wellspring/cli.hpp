#pragma once

#include <string>
#include <vector>

namespace wellspring::cli {

// Dispatches one subcommand (eigen, verify-tise, jumps, naive-demo,
// ehrenfest) and writes its report to stdout or --out.  Returns the process
// exit code: 0 all checks passed, 1 a suite verdict failed, 2 usage or
// config error.
int run(const std::vector<std::string>& args);

}  // namespace wellspring::cli
