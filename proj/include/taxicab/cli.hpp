#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace taxicab::cli {

/// Run the command line given by args (without the program name), writing
/// results to `out` and diagnostics to `err`. Returns the process exit
/// code: 0 success, 1 domain/validation error, 2 parse/usage error.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace taxicab::cli
