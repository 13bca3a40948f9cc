#pragma once

#include <stdexcept>
#include <string>

namespace pin2 {

// CLI exit-code mapping: InvalidInputError -> 1, InternalCheckError -> 2,
// ResourceError -> 3.

struct InvalidInputError : std::runtime_error {
    explicit InvalidInputError(const std::string& msg) : std::runtime_error(msg) {}
};

// A paper-derived identity or an internal consistency condition failed.
struct InternalCheckError : std::logic_error {
    explicit InternalCheckError(const std::string& msg) : std::logic_error(msg) {}
};

struct ResourceError : std::runtime_error {
    explicit ResourceError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace pin2
