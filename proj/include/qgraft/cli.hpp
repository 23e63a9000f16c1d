// Command-line front end. Exit codes: 0 all checks pass, 1 a check failed,
// 2 usage or input error.
#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace qgraft {

int dispatch(int argc, const char* const* argv, std::ostream& out, std::ostream& err);
int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qgraft
