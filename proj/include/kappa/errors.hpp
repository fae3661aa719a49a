#pragma once

#include <stdexcept>
#include <string>

namespace kappa {

// Base class for all recoverable errors raised by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Quadratic-form text could not be parsed; carries a byte offset into the input.
struct ParseError : Error {
    ParseError(const std::string& what, std::size_t offset)
        : Error(what + " (at offset " + std::to_string(offset) + ")"), offset(offset) {}
    std::size_t offset;
};

// A document (JSON/CSV) is malformed or violates a format invariant.
struct FormatError : Error {
    using Error::Error;
};

// The given forms do not span a space of the required dimension.
struct DependentBasis : Error {
    using Error::Error;
};

// A coordinate or basis change matrix is not invertible.
struct SingularTransform : Error {
    using Error::Error;
};

// The first d+1 points of a configuration are affinely dependent.
struct DegenerateFrame : Error {
    using Error::Error;
};

// Elimination over the dual ring hit a column whose remaining entries are all
// non-units; the evaluation point is non-generic.
struct PivotNotUnit : Error {
    using Error::Error;
};

// A randomized computation failed to find a generic point within its retry budget.
struct GenericityFailure : Error {
    using Error::Error;
};

struct LengthMismatch : Error {
    using Error::Error;
};

struct WrongShape : Error {
    using Error::Error;
};

struct UnknownExample : Error {
    using Error::Error;
};

// Deterministic interpolation nodes produced a singular system.
struct InterpolationSingular : Error {
    using Error::Error;
};

// A purported kappa vector exceeds one of its ceilings.
struct InvalidKappa : Error {
    using Error::Error;
};

// Bad field specification (composite modulus, characteristic 2 or 3, ...).
struct BadField : Error {
    using Error::Error;
};

}  // namespace kappa
