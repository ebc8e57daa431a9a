#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace ustlab {

// Exit codes: 0 success, 1 invalid input, 2 failed verification.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ustlab
