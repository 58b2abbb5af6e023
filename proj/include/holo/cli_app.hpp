#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace holo {

// One CLI invocation against the given streams. args excludes the program
// name. Returns the process exit code: 0 success, 1 verification failure or
// internal inconsistency, 2 parse or usage error, 3 budget exceeded, 4
// out-of-scope input.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace holo
