#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace gt::cli {

// Runs one `gt` invocation; args exclude the program name.  Returns the exit code.
int run(const std::vector<std::string>& args, std::ostream& out);

}  // namespace gt::cli
