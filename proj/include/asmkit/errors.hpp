#pragma once

#include <stdexcept>
#include <string>

namespace asmkit {

/// Division by an exact zero. Evaluations at a random sample point throw
/// this when the point hits a pole; the sampler catches it and redraws.
class division_by_zero : public std::domain_error {
public:
    explicit division_by_zero(const std::string& what) : std::domain_error(what) {}
};

/// A precondition of an operation was violated (odd Pfaffian, bad shape, ...).
class contract_violation : public std::invalid_argument {
public:
    explicit contract_violation(const std::string& what) : std::invalid_argument(what) {}
};

/// An enumeration or sampling budget was exceeded.
class resource_limit : public std::runtime_error {
public:
    explicit resource_limit(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace asmkit
