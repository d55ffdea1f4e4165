#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace diffca {

// Subcommands: run, eca, compare, selfcheck, fixtures.
//
// Exit status: 0 on success, 1 for parse, IO or domain errors, 2 for
// malformed or conflicting flags. Artifacts go to `out` (or --out), every
// diagnostic goes to `err`.
int run_cli(int argc, const char* const* argv, std::ostream& out,
            std::ostream& err);

// argv[0] is supplied internally.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace diffca
