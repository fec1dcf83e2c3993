#pragma once

#include <stdexcept>
#include <string>

namespace eca {

// Base class for every error thrown by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Violated preconditions and domain restrictions. The CLI maps these to
// exit code 2.
struct DomainError : Error {
    using Error::Error;
};

// The cubic has no pair of distinct positive roots for the given parameters.
struct NotAdmissible : DomainError {
    using DomainError::DomainError;
};

// Two roots coincide (within tolerance): constant-curvature circle, no
// oscillation to integrate over.
struct Degenerate : DomainError {
    using DomainError::DomainError;
};

struct OutOfRange : DomainError {
    using DomainError::DomainError;
};

struct NotClosed : DomainError {
    using DomainError::DomainError;
};

struct NotCritical : DomainError {
    using DomainError::DomainError;
};

struct ZeroCurvature : DomainError {
    using DomainError::DomainError;
};

struct IneligibleParity : DomainError {
    using DomainError::DomainError;
};

struct StepTooLarge : DomainError {
    using DomainError::DomainError;
};

// Numerical failures. The CLI maps these to exit code 3.
struct NumericalError : Error {
    using Error::Error;
};

struct QuadratureFailure : NumericalError {
    using NumericalError::NumericalError;
};

struct FrameDrift : NumericalError {
    using NumericalError::NumericalError;
};

} // namespace eca
