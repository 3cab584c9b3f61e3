#pragma once

#include <stdexcept>
#include <string>

namespace bpfib {

// Root of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed Rational/Poly/grid text.
class ParseError : public Error {
public:
    using Error::Error;
};

// A precondition on the operands themselves was broken (mixed radicands,
// negative index where only nonnegative ones make sense).
class ContractViolation : public Error {
public:
    using Error::Error;
};

class DivisionByZero : public Error {
public:
    using Error::Error;
};

class NotInvertible : public Error {
public:
    using Error::Error;
};

// a = 0 or b = 0.
class InvalidParameter : public Error {
public:
    using Error::Error;
};

// ab = -4 (or a*b*x^2 = -4 for the Binet roots).
class DegenerateParameter : public Error {
public:
    using Error::Error;
};

// Bad command-line usage or an empty audit grid.
class UsageError : public Error {
public:
    using Error::Error;
};

// Two exact routes that must agree did not. Always a defect.
class ConsistencyError : public Error {
public:
    using Error::Error;
};

} // namespace bpfib
