#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace irrtri::cli {

// args excludes the program name. Returns the process exit code:
// 0 success, 1 failed check or invalid input, 2 usage or parse error.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace irrtri::cli
