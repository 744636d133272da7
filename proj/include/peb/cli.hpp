#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace peb {

// Exit codes: 0 success, 1 property violated / counterexample found,
// 2 usage or input error, 3 budget exceeded.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace peb
