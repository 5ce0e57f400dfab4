#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace prodmat {

// Base class of every error thrown by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Series division f/g with g(0) = 0, or division by the zero series.
struct ZeroConstantTerm : Error {
    using Error::Error;
};

// compose(f, g) with g(0) != 0.
struct NonzeroInnerConstant : Error {
    using Error::Error;
};

// reversion(f) with f(0) != 0 or f'(0) = 0.
struct NotReversible : Error {
    using Error::Error;
};

// A constant-term or truncation-order precondition failed (exp/log/sqrt,
// derivative of an order-0 series, insufficient series order, ...).
struct DomainError : Error {
    using Error::Error;
};

// named_series() called with a name other than C, M, R, S, T, F, B.
struct UnknownName : Error {
    using Error::Error;
};

// Not enough sequence terms to fit and validate a recurrence.
struct InsufficientTerms : Error {
    using Error::Error;
};

// A realized production-matrix entry is negative.
struct NegativeEntry : Error {
    using Error::Error;
};

// A realized production-matrix entry is not an integer, or an exact
// division left a remainder.
struct NonIntegerEntry : Error {
    using Error::Error;
};

// A rowexpr matrix spec has no support bound.
struct UnboundedSupport : Error {
    using Error::Error;
};

// A fitted dependence failed cross-validation against the sequence.
struct Inconsistent : Error {
    using Error::Error;
};

// Malformed input text. Positions are 1-based.
struct SyntaxError : Error {
    std::size_t line;
    std::size_t column;

    SyntaxError(std::size_t line_, std::size_t column_, const std::string& what_)
        : Error("line " + std::to_string(line_) + ", column " + std::to_string(column_) + ": " + what_),
          line(line_),
          column(column_) {}
};

// A label of value k lists a number of successors different from k.
struct ArityMismatch : Error {
    using Error::Error;
};

// A label occurs in a rule without heading a production.
struct UndefinedLabel : Error {
    using Error::Error;
};

}  // namespace prodmat
