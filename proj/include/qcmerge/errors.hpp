#pragma once

#include <stdexcept>
#include <string>

namespace qcmerge {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Operands with incompatible qubit counts.
struct DimensionError : Error {
    using Error::Error;
};

// Precondition violated by the caller.
struct UsageError : Error {
    using Error::Error;
};

// Dense-matrix size caps and similar limits.
struct ResourceError : Error {
    using Error::Error;
};

// Exact rational arithmetic overflowed the word size.
struct ArithmeticError : Error {
    using Error::Error;
};

struct ParseError : Error {
    using Error::Error;
};

// Gate outside the supported set; message names the offending line.
struct UnsupportedGateError : ParseError {
    using ParseError::ParseError;
};

}  // namespace qcmerge
