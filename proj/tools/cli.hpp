#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace uavqos::cli {

enum ExitCode : int { kOk = 0, kInvalid = 1, kIo = 2 };

// Entry point shared by the executable and the tests. args excludes argv[0].
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace uavqos::cli
