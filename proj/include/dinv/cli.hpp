#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace dinv::cli {

// Full command-line entry point, parameterized over streams for testing.
// args excludes the program name. Returns the process exit code:
// 0 success (certificate produced where applicable), 2 negative or
// inconclusive verdict, 1 error (one "error\tkind\tmessage" line on err).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace dinv::cli
