#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace mvd::cli {

/// Process exit codes.
enum ExitCode : int {
  kOk = 0,
  kNotVisible = 1,  // verification ran and the set is not valid
  kInputError = 2,
  kRefused = 3,  // instance exceeds the solver budget or oracle cap
};

/// Runs one invocation. `args` excludes the program name. Reads the graph
/// from --input or `in`; results go to `out`, diagnostics to `err`.
int run(std::vector<std::string> args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace mvd::cli
