#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hypo {

/// Command-line entry point; `args` excludes the program name. Certificates
/// and graphs go to `out` (or the --out file), progress and diagnostics to
/// `err`. Returns 0 pass, 1 fail, 2 inconclusive, 3 input error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hypo
