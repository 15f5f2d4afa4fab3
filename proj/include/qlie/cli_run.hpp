#pragma once

#include <string>
#include <vector>

namespace qlie {

struct CliResult {
    int exit_code = 0;   // 0 ok, 1 validation failure, 2 input error, 3 resource bound
    std::string output;  // JSON by default, human-readable with --pretty
};

// The whole command-line surface, callable in-process for tests.
CliResult cli_run(const std::vector<std::string>& args);

} // namespace qlie
