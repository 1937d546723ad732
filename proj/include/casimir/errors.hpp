#pragma once

#include <stdexcept>
#include <string>

namespace casimir {

/// Thrown when an argument lies outside the domain of an operation
/// (non-positive separation, negative temperature, ...).
class DomainError : public std::domain_error {
public:
    explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

/// Thrown when a series or iterative solver exhausts its budget.
class ConvergenceError : public std::runtime_error {
public:
    explicit ConvergenceError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace casimir
