#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ncdeg {

// Runs the command-line tool on the given arguments (program name already
// stripped), writing reports to `out` and diagnostics to `err`.
//
// Exit codes: 0 for success, including runs that end in truncation; 1 for a
// negative mathematical outcome (hypotheses fail, a sharpness cell misses
// the bound, a campaign instance fails); 2 for parse, configuration, and
// usage errors.
int run_cli(std::vector<std::string> args, std::ostream& out,
            std::ostream& err);

}  // namespace ncdeg
