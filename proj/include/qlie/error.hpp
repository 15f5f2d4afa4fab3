#pragma once

#include <stdexcept>
#include <string>

namespace qlie {

// Error taxonomy mirrors the CLI exit codes:
//   validation_error -> 1, input_error -> 2, resource_error -> 3.
// internal_error signals a broken invariant and also exits 1.

struct input_error : std::runtime_error {
    explicit input_error(const std::string& what) : std::runtime_error(what) {}
};

struct resource_error : std::runtime_error {
    explicit resource_error(const std::string& what) : std::runtime_error(what) {}
};

struct internal_error : std::logic_error {
    explicit internal_error(const std::string& what) : std::logic_error(what) {}
};

struct validation_error : std::runtime_error {
    explicit validation_error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace qlie
