#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qtheta::cli {

/// Runs one invocation. `args` excludes the program name. Output is written
/// only once the command has fully succeeded; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qtheta::cli
