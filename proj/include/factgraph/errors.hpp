#pragma once

#include <stdexcept>
#include <string>

namespace factgraph {

// Error taxonomy shared across the library. All errors derive from
// std::runtime_error so callers can catch broadly or per category.

struct InvalidInputError : std::runtime_error {
    explicit InvalidInputError(const std::string& what) : std::runtime_error(what) {}
};

struct StructuralError : std::runtime_error {
    explicit StructuralError(const std::string& what) : std::runtime_error(what) {}
};

struct NumericError : std::runtime_error {
    explicit NumericError(const std::string& what) : std::runtime_error(what) {}
};

struct IoError : std::runtime_error {
    explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

struct UsageError : std::runtime_error {
    explicit UsageError(const std::string& what) : std::runtime_error(what) {}
};

// Transport failures are retryable; `attempts` records how many tries were made.
struct TransportError : std::runtime_error {
    TransportError(const std::string& what, int attempts_made)
        : std::runtime_error(what), attempts(attempts_made) {}
    int attempts = 0;
};

}  // namespace factgraph
