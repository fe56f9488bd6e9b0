#pragma once

#include <stdexcept>

namespace acyclo {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Input text does not match one of the file formats.
struct FormatError : Error {
    using Error::Error;
};
// "Exactly one direction per pair" broken (both directions, or a missing one
// where the format requires completeness).
struct AntisymmetryViolation : FormatError {
    using FormatError::FormatError;
};
struct NotAPermutation : FormatError {
    using FormatError::FormatError;
};

struct DimensionMismatch : Error {
    using Error::Error;
};
struct PreconditionViolated : Error {
    using Error::Error;
};
struct SizeLimitExceeded : Error {
    using Error::Error;
};
struct TimeoutExceeded : Error {
    using Error::Error;
};

// A constructed certificate failed its independent re-check.
struct VerificationFailed : Error {
    using Error::Error;
};
struct ChromaticTooLow : Error {
    using Error::Error;
};
struct NoOddCycle : Error {
    using Error::Error;
};

}  // namespace acyclo
