#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cotop::cli {

/// Exit codes: 0 success or all checks passed, 1 a verification failed or
/// a probe row is unresolved, 2 usage, parse or input error.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cotop::cli
