#pragma once

#include <stdexcept>
#include <string>

namespace dualchoice {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Input data violates a documented invariant (bad probabilities,
/// non-normalized sessions, malformed records, ...).
class ValidationError : public Error {
public:
    using Error::Error;
};

/// An argument is outside the domain of an operation (negative Luce
/// attribute, base <= 1, wrong arity, index out of range, ...).
class DomainError : public Error {
public:
    using Error::Error;
};

/// A file could not be parsed; the message carries a line/record locator.
class ParseError : public ValidationError {
public:
    using ValidationError::ValidationError;
};

} // namespace dualchoice
