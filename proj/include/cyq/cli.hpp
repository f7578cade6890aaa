#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace cyq::cli {

// Runs one CLI invocation. Exit codes: 0 success, 1 a mathematical
// verification failed, 2 engineering failure (bad usage, caps, internal
// inconsistency).
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace cyq::cli
