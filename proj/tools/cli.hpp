#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace lssd {

// Runs one lssdtool invocation; args excludes the program name.  Exit code
// 0: success / property verified / parameters feasible; 1: a checked
// property fails; 2: usage or I/O errors.
int run_cli(std::vector<std::string> args, std::ostream& out,
            std::ostream& err);

}  // namespace lssd
