#pragma once

#include <stdexcept>
#include <string>

namespace pwl {

// Bad input for an otherwise well-posed operation (rank too small, length
// mismatch, non-invariant polynomial, ...).
class DomainError : public std::runtime_error {
public:
    explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

// Enumeration or degree limits exceeded.
class ResourceError : public DomainError {
public:
    explicit ResourceError(const std::string& what) : DomainError(what) {}
};

// A certificate that must hold by a theorem did not; this indicates a bug.
class TheoremViolation : public std::runtime_error {
public:
    explicit TheoremViolation(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace pwl
