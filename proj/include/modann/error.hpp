#pragma once

#include <stdexcept>
#include <string>

namespace modann {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed argument: zero where a positive integer is required, a
/// composite where a prime is required, mismatched rings, bad spec text.
class InvalidInput : public Error {
public:
    using Error::Error;
};

/// The request is well-formed but names something the library does not
/// model (infinite enumeration, mixed torsion/free modules, ...).
class OutOfScope : public Error {
public:
    using Error::Error;
};

/// An enumeration would exceed the configured element bound, or an
/// intermediate product overflowed machine width.
class BoundExceeded : public Error {
public:
    using Error::Error;
};

} // namespace modann
