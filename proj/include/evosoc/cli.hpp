#pragma once

#include <string>
#include <vector>

namespace evosoc {

/// Entry point behind main(). Exit codes: 0 success, 1 runtime failure,
/// 2 invalid arguments.
int run_cli(const std::vector<std::string>& args);

} // namespace evosoc
