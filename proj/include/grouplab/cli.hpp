#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace grouplab::cli {

// Runs the command line given as argv[1..] and writes to the supplied
// streams. Exit codes: 0 = no violation and no error, 2 = at least one
// VIOLATION verdict, 1 = usage or I/O error.
int run(std::vector<std::string> args, std::ostream& out, std::ostream& err);

} // namespace grouplab::cli
