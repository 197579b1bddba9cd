#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace latfam::io {

// Command-line entry point. Exit codes: 0 success, 1 domain error,
// 2 usage / IO / parse error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace latfam::io
