#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace superspace {

// Exit codes of the command-line front end.
enum ExitCode : int {
  kExitOk = 0,
  kExitInput = 1,      // usage, parse and other input errors
  kExitPole = 2,       // M in -2N where a formula is undefined
  kExitInvariant = 3,  // internal invariant violated, or a verify suite failed
};

// Runs one command. `args` excludes the program name; `in` is read when no
// polynomial is given inline or via --input.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err);

}  // namespace superspace
