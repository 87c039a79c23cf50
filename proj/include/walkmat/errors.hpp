#pragma once

#include <stdexcept>

namespace walkmat {

// Domain error vocabulary. Everything derives from std::invalid_argument or
// std::runtime_error so call sites can catch broadly or precisely.

struct InvalidVertex : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct SelfLoop : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct InvalidOrder : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct ShapeError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct DegenerateSubstitution : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct DivisionByZeroPoly : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct UndefinedResultant : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct PreconditionViolation : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct NotSymmetric : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Scale factor of an eigenvector block is numerically zero; signals
// inconsistent root/eigenvalue data upstream rather than a bad argument.
struct NumericallySingularScale : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct InvalidProbability : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Malformed text in one of the exchange formats (graphs, matrices,
// polynomials, reports).
struct FormatError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace walkmat
