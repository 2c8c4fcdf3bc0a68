#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace inselim {

// Runs one CLI invocation; args excludes the program name.  Returns the
// process exit code: 0 for success or a passing verification, 1 for a
// failing verification, 2 for usage errors.
int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace inselim
