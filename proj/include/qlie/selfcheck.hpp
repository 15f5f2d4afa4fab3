#pragma once

#include <string>
#include <vector>

namespace qlie {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    std::string detail;
    double seconds = 0;
};

struct SelfcheckOptions {
    std::string cache_dir; // empty: in-memory only
    std::string data_dir;  // empty: default lookup
};

// The acceptance suite: every criterion at its stated tolerance (all
// checks exact). Each entry runs independently; a throw inside one
// criterion marks it failed with the message as detail.
std::vector<CriterionResult> run_acceptance(const SelfcheckOptions& options = {});

// Lightweight helpers used by criterion 12 and the validate verb.
bool reference_table_checksum_ok(const std::string& path);

} // namespace qlie
