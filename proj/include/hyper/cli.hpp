#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace hyper::cli {

/// Runs one hyperctl invocation; args excludes the program name. Returns 0 on
/// success, 1 on domain errors and 2 on malformed input or usage errors.
/// Every subcommand except export-dot ends its output with one JSON line.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hyper::cli
