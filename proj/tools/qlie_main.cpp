#include <cstdio>

#include "qlie/cli_run.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    qlie::CliResult r = qlie::cli_run(args);
    std::fputs(r.output.c_str(), stdout);
    return r.exit_code;
}
