#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace profab::cli {

/// Runs one command line (without the program name) and returns the exit
/// status: 0 yes/equal, 1 no/unequal, 2 error.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace profab::cli
