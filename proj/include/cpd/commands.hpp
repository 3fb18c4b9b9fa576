#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "cpd/cells2.hpp"

namespace cpd {

struct RunConfig {
  Degree max_degree = 3;
  std::string format = "text";  // "text" or "json"
  unsigned long seed = 0;       // reserved for randomized commands
};

// Runs one CLI command.  `args` mixes `.cpd` file paths (loaded in order, on
// top of the built-in definitions) with definition names and, for `normalize`,
// a cell expression.  Exit codes: 0 success / property confirmed, 1 property
// check came out false, 2 input or parse error, 3 outside the decidable
// fragment.
int run_command(const std::string& command, const std::vector<std::string>& args,
                const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace cpd
