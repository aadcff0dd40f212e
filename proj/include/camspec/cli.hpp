#pragma once

#include <string>
#include <vector>

namespace camspec {

// Outcome of one command-line invocation with captured streams.
struct CliResult {
    int exit_code = 0;
    std::string out;
    std::string err;
};

// Full command-line entry point (argv[0] is the program name).
// Exit codes: 0 success, 2 schema/parse, 3 domain/precondition,
// 4 property failure, 1 unexpected.
int run_cli(int argc, const char* const* argv);

// Same dispatch with captured output; args exclude the program name.
CliResult run_cli_capture(const std::vector<std::string>& args);

} // namespace camspec
