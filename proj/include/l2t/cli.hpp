#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace l2t {

/// Parses argv and dispatches one subcommand (eval, degree, check, tower,
/// catalog). Returns the process exit code: 0 success, 1 check failure,
/// 2 parse or validation error, 3 non-acyclic input.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace l2t
