#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace lagsub::cli {

/// Runs the command-line interface.  Exit codes: 0 success (certify: Closed),
/// 1 usage/parse/validation error, 2 NotClosed verdict or failed checks.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace lagsub::cli
