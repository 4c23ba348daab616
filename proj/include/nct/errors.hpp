#pragma once

#include <stdexcept>
#include <string>

namespace nct {

// Three failure categories, mirrored by the CLI exit codes:
//   InputError     — malformed or precondition-violating input (exit 3)
//   DomainError    — a mathematically expected failure, e.g. theta outside
//                    the domain of a group element (exit 2)
//   ViolationError — an identity that must hold was found broken; indicates
//                    a bug, never expected in a correct build (exit 1)
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct InputError : Error {
    using Error::Error;
};
struct DomainError : Error {
    using Error::Error;
};
struct ViolationError : Error {
    using Error::Error;
};

// input-class
struct OddDimension : InputError {
    using InputError::InputError;
};
struct NotUnimodular : InputError {
    using InputError::InputError;
};
struct NotAntisymmetric : InputError {
    using InputError::InputError;
};
struct OddKRejected : InputError {
    using InputError::InputError;
};
struct DimensionMismatch : InputError {
    using InputError::InputError;
};
struct IndexOutOfRange : InputError {
    using InputError::InputError;
};
struct ParityMismatch : InputError {
    using InputError::InputError;
};
struct WrongDimension : InputError {
    using InputError::InputError;
};
struct MalformedVector : InputError {
    using InputError::InputError;
};

// domain-class
struct SingularMatrix : DomainError {
    using DomainError::DomainError;
};
struct SingularInput : DomainError {
    using DomainError::DomainError;
};
struct SingularBlock : DomainError {
    using DomainError::DomainError;
};
struct OutsideDomain : DomainError {
    using DomainError::DomainError;
};
struct DomainFailure : DomainError {
    using DomainError::DomainError;
};

// violation-class
struct InternalAssertionFailure : ViolationError {
    using ViolationError::ViolationError;
};
struct NoIntertwiner : ViolationError {
    using ViolationError::ViolationError;
};
struct AmbiguousIntertwiner : ViolationError {
    using ViolationError::ViolationError;
};
struct NonIntegralAction : ViolationError {
    using ViolationError::ViolationError;
};

} // namespace nct
