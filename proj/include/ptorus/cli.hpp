#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ptorus {

// Command-line front end. Exit codes: 0 success, 1 verification failure or
// witness found, 2 usage/input errors.
int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace ptorus
