#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hairpin::cli {

/// Exit status: 0 success, 1 negative answer (membership false, bound
/// violated), 2 usage or input error. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hairpin::cli
