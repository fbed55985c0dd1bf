#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace domhad::cli {

/// Runs one invocation; `args` excludes the program name.
/// Exit codes: 0 success, 1 operational or input error, 2 negative verdict
/// (invalid model in `verify`, counterexample in `hunt`).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace domhad::cli
