#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace banach_ortho {

// Command-line front end, callable in-process for tests. args excludes the
// program name. JSON goes to out; diagnostics and logs go to err.
//
// Commands: check, symmetry, isometry, preserve, hilbert-fit, verify,
// fixtures. Exit codes: check returns 0 when orthogonal, 1 when not, 2 on
// input error; verify and fixtures return 0 iff everything passed; the rest
// return 0 unless the input was rejected (2).
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace banach_ortho
