#pragma once

#include <stdexcept>
#include <string>

namespace fracgrad {

/// Argument outside the mathematical domain of an operation (poles, s outside (0,1), ...).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Parameters fall in the wrong sub/critical/super regime for the requested constant.
class RegimeError : public DomainError {
public:
    using DomainError::DomainError;
};

/// Input data violates an operator precondition (e.g. non-zero mean under a reject policy).
class PreconditionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Fields on different grids, wrong dimension, malformed files.
class StructuralError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Work would exceed the configured evaluation budget.
class ResourceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A quotient whose denominator vanishes.
class UndefinedQuotientError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

}  // namespace fracgrad
