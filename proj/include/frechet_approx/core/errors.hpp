#pragma once

#include <stdexcept>
#include <string>

namespace fapx {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed arguments: dimension mismatch, out-of-range parameter, etc.
class InputError : public Error {
public:
    using Error::Error;
};

/// A requested allocation exceeds the configured budget.
class ResourceError : public Error {
public:
    using Error::Error;
};

/// An integral was detected to diverge before the truncation cap.
class DivergenceError : public Error {
public:
    using Error::Error;
};

/// The input violates a mathematical precondition of the operation.
class PreconditionError : public Error {
public:
    using Error::Error;
};

/// A fitter could not produce a well-conditioned approximant.
class FitError : public Error {
public:
    using Error::Error;
};

} // namespace fapx
