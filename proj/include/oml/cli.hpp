#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace oml {

/// Whole CLI as a function: `args` is argv[1..] in natural order; reports
/// go to `out`, diagnostics to `err`. Returns the process exit code:
/// 0 when every checked property holds, 1 when a property is violated,
/// 2 for usage or input errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace oml
