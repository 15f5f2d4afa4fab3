// Acceptance suite runner: one pass/fail line per criterion, nonzero
// exit if anything fails. Uses a scratch cache directory so a cold run
// is representative.
#include <cstdio>
#include <filesystem>

#include "qlie/selfcheck.hpp"

int main(int argc, char** argv) {
    qlie::SelfcheckOptions opt;
    bool warm = argc > 1 && std::string(argv[1]) == "--warm-cache";
    auto cache = std::filesystem::temp_directory_path() / "qlie_acceptance_cache";
    if (!warm) std::filesystem::remove_all(cache);
    opt.cache_dir = cache.string();

    auto results = qlie::run_acceptance(opt);
    bool all = true;
    for (const auto& r : results) {
        std::printf("[%s] %2d. %-36s (%6.2fs)  %s\n", r.pass ? "PASS" : "FAIL", r.id,
                    r.name.c_str(), r.seconds, r.detail.c_str());
        if (!r.pass) all = false;
    }
    std::printf("%s\n", all ? "ACCEPTANCE: all criteria passed" : "ACCEPTANCE: FAILURES");
    return all ? 0 : 1;
}
