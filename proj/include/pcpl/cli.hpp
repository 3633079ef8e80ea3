#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace pcpl {

// Command-line front end: encode / decode / codebook / analyze / golin /
// rational-encode / rational-decode / check.  `args` excludes the program
// name.  Returns the process exit status: 0 success, 1 usage error, 2 data
// error (bad frame, bad integer, bad rational), 3 analysis nonconvergence.
int run_cli(const std::vector<std::string>& args, std::istream& in,
            std::ostream& out, std::ostream& err);

}  // namespace pcpl
