#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace j3::cli {

/// Runs the j3 command line with `args` (program name excluded). Returns the
/// process exit code: 0 on success, 1 on a math or evaluation error, 2 on a
/// usage or parse error. `interactive` enables the REPL prompt.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err, bool interactive = false);

}  // namespace j3::cli
