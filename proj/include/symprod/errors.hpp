#pragma once

#include <stdexcept>
#include <string>

namespace symprod {

/// Caller violated an operation's precondition (mismatched truncation
/// variables, non-finite expansions, bad arguments).
class UsageError : public std::invalid_argument {
public:
    explicit UsageError(const std::string& what) : std::invalid_argument(what) {}
};

/// Evaluation outside the domain where an exact answer exists, e.g. a
/// negative base raised to a strict half-integer power.
class DomainError : public std::domain_error {
public:
    explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

/// Manifold data missing or inconsistent for the requested computation.
class InputError : public std::runtime_error {
public:
    explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace symprod
