#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace pcid::cli {

enum ExitCode : int {
  kSuccess = 0,
  kNegative = 1,
  kUsage = 2,
  kResourceLimit = 3,
  kOutOfScope = 4,
};

// Runs one command. `args` excludes the program name; `in` backs the `-`
// path.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, std::istream& in);

}  // namespace pcid::cli
