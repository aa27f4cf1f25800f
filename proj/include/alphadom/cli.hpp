#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace alphadom::cli {

// Runs a full command line (without the program name). Exit codes:
// 0 success / valid, 1 usage or input error, 2 semantic negative
// (invalid set, failed experiment assertion).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace alphadom::cli
