#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ferrer::cli {

/// Exit codes shared by every subcommand.
enum Exit : int {
  ok = 0,
  internal = 1,
  invalid_input = 2,
  mismatch = 3,
  size_limit = 4,
  not_m_vector = 5,
  infeasible = 6,
  usage = 64,
};

/// Runs one command line (without the program name). "-" as a path reads `in`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace ferrer::cli
