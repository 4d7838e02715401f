#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace oml::cli {

// Exit codes: 0 pass, 1 counterexample or expectation mismatch, 2 usage or
// parse error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace oml::cli
