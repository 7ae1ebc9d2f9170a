#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace sct {

// Runs the command-line interface on already-split arguments (program name
// excluded), writing results to `out` and diagnostics to `err`.  Returns the
// process exit code: 0 on success, 1 when a requested verification fails or a
// computation cannot be completed, 2 on usage errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sct
