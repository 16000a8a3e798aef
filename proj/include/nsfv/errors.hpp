#pragma once

#include <stdexcept>
#include <string>

namespace nsfv {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Invalid argument to a constructor or operation (bad grid, bad parameter).
class InvalidArgument : public Error {
public:
    using Error::Error;
};

/// Configuration file or command-line override could not be turned into a RunConfig.
class ConfigError : public Error {
public:
    using Error::Error;
};

/// A density or temperature value became nonpositive.
class PositivityLoss : public Error {
public:
    using Error::Error;
};

/// Picard iteration did not reach the requested tolerance.
class NonConvergence : public Error {
public:
    using Error::Error;
};

class LinearSolveFailure : public Error {
public:
    using Error::Error;
};

}  // namespace nsfv
