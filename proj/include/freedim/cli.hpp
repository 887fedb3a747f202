#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace freedim {

/// Runs one CLI invocation. Reports go to `out` (or the --out file),
/// diagnostics and warnings to `err`, "-" inputs read from `in`.
/// Returns the process exit status: 0 for success (verdict pass or no
/// verdict), 1 for a failing verdict, 2 for usage or parse errors.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err);

}  // namespace freedim
