#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace augcube::cli {

// Runs the command line given its arguments (program name excluded) and
// returns the process exit code: 0 on success / verification pass, 1 on a
// verification failure, 2 on usage or I/O errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace augcube::cli
