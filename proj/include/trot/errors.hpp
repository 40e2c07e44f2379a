#pragma once

#include <stdexcept>
#include <string>

namespace trot {

/// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A parameter value violates a type invariant (mass <= 0, x1 outside [0, 0.5], ...).
struct DomainError : Error {
    using Error::Error;
};

/// An evaluation time lies outside the validity window of the model.
struct RangeError : Error {
    using Error::Error;
};

/// Degenerate stance geometry: coincident feet or a support diagonal with no moment arm.
struct GeometryError : Error {
    using Error::Error;
};

/// A velocity profile is inconsistent with the gait it claims to describe.
struct ProfileError : Error {
    using Error::Error;
};

/// Integration produced a non-finite state or a solve failed unexpectedly.
struct NumericError : Error {
    using Error::Error;
};

/// Configuration document is malformed or violates the schema.
/// The message carries the JSON path of the offending field.
struct ConfigError : Error {
    using Error::Error;
};

} // namespace trot
