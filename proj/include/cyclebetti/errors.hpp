#pragma once
// Error types shared across the library.

#include <stdexcept>
#include <string>

namespace cyclebetti {

// Rejected input: bad parameters, malformed files, violated preconditions.
class invalid_parameter_error : public std::invalid_argument {
public:
    explicit invalid_parameter_error(const std::string& what)
        : std::invalid_argument(what) {}
};

// An enumeration or matrix would exceed a configured budget.
class resource_limit_error : public std::runtime_error {
public:
    explicit resource_limit_error(const std::string& what)
        : std::runtime_error(what) {}
};

// A structural invariant the library relies on failed to hold.
class internal_error : public std::logic_error {
public:
    explicit internal_error(const std::string& what)
        : std::logic_error(what) {}
};

}  // namespace cyclebetti
