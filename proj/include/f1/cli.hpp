#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace f1 {

/// Dispatch for the f1points command line. Deterministic byte output for
/// fixed arguments. Exit codes: 0 ok, 1 verification failure, 2 usage error,
/// 3 computation budget exceeded.
int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace f1
