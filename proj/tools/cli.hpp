#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace weylva::cli {

// Exit codes: 0 all checks pass, 1 verification failure, 2 configuration error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace weylva::cli
