#pragma once

#include <stdexcept>
#include <string>

namespace assprime {

// Base class for every error raised by the library.  The CLI maps each
// subclass to a distinct process exit code.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Operands live in different polynomial rings.
class RingMismatchError : public Error {
public:
    using Error::Error;
};

// A value is outside the domain of the requested operation (zero ideal
// where a nonzero one is required, negative exponent, non-monomial
// generator, inhomogeneous polynomial, ...).
class DomainError : public Error {
public:
    using Error::Error;
};

// An ideal/module inclusion required by the operation does not hold.
class ContainmentError : public DomainError {
public:
    using DomainError::DomainError;
};

// A size guard refused to run a computation that would exceed the
// configured resource limits.
class ResourceError : public Error {
public:
    using Error::Error;
};

// Malformed input text.  Position is 1-based.
class ParseError : public Error {
public:
    ParseError(int line, int column, const std::string& what)
        : Error("parse error at " + std::to_string(line) + ":" +
                std::to_string(column) + ": " + what),
          line_(line),
          column_(column) {}

    int line() const { return line_; }
    int column() const { return column_; }

private:
    int line_;
    int column_;
};

// Two independently computed values that must agree by theorem do not.
// This always indicates a bug in the library, never bad user input.
class TheoremViolationError : public Error {
public:
    using Error::Error;
};

} // namespace assprime
