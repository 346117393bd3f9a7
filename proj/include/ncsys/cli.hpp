#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ncsys {

// Exit codes: 0 pass, 1 verification failure or inconclusive search, 2 usage or schema error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace ncsys
