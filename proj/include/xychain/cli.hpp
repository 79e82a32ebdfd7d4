#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace xychain {

// Full command-line front end. `args` excludes the program name.
// Exit codes: 0 success, 1 usage error (message on `err`), 2 numerical
// failure (named module error on `err`).
int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace xychain
