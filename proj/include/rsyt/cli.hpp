#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace rsyt {

/// Runs the command line `args` (without the program name).  Writes the
/// result document to `out`, or to --out when given.  Returns 0 on success
/// and 2 on invalid input, after writing {"error":{"kind":...,"detail":...}}
/// to `out`.  `err` receives diagnostics only.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace rsyt
