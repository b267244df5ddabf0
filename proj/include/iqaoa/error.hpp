#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace iqaoa {

// Malformed instance text, vector literal, or rank literal.
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Well-formed input that violates a domain invariant.
class ValidationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Enumeration or statevector request larger than the configured budget.
class BudgetError : public std::runtime_error {
public:
    BudgetError(const std::string& what, std::string requested)
        : std::runtime_error(what), requested_(std::move(requested)) {}

    const std::string& requested() const noexcept { return requested_; }

private:
    std::string requested_;
};

class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Internal consistency failure (e.g. a cycle in a graph that must be acyclic).
class StructuralError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace iqaoa
