#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qmarkoff::cli {

enum ExitCode : int {
  ok = 0,
  failure = 1,  // internal error, or an identity check came out unequal
  usage = 2,
  unexplained = 3,
  resource_bound = 4,
  invalid_word = 5,
  k_out_of_range = 6,
};

/// Runs one invocation; args excludes the program name. Output goes to out,
/// the one-line diagnostic (if any) to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qmarkoff::cli
