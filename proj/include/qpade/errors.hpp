#pragma once

#include <stdexcept>
#include <string>

namespace qpade {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DivisionByZero : Error {
    using Error::Error;
};

// Bad argument: unknown parameter name, index out of range, m < 0, ...
struct DomainError : Error {
    using Error::Error;
};

// The instance violates a genericity guard (null space not 1-dimensional,
// degree loss in an interpolating polynomial, forbidden parameter value).
struct NonGenericParameters : Error {
    using Error::Error;
};

// A Casorati determinant does not factor into its predicted shape.
struct ShapeMismatch : Error {
    using Error::Error;
};

// A cleared denominator vanished at the tested values; the identity cannot
// be decided for this instance.
struct IndeterminateEvaluation : Error {
    using Error::Error;
};

struct ConstraintViolation : Error {
    using Error::Error;
};

} // namespace qpade
