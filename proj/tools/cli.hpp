#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace nerode {

/// Runs one command line (without the program name). Returns the process
/// exit code: 0 success or PASS, 1 FAIL verdict, 2 usage or input error.
int run_cli(const std::vector<std::string> &args, std::istream &in,
            std::ostream &out, std::ostream &err);

} // namespace nerode
