#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qsuper {

/// Exit codes: 0 all checks pass, 1 a check failed, 2 usage or input error,
/// 3 only documented anomalies.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qsuper
