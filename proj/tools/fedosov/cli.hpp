// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace fedosov::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kDomain = 2,      // inadmissible point; the singularity report is printed
  kSingular = 3,    // a flow stopped at a singular set or the step size collapsed
  kVerifyFailed = 4,
};

/// Entry point shared by the executable and the tests. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace fedosov::cli
