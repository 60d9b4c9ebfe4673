#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace kmarkov::cli {

/// Runs one command line (without the program name). Returns the process
/// exit code: 0 success, 1 verification failures, 2 usage errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace kmarkov::cli
