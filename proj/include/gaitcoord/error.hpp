// gaitcoord error types
#pragma once

#include <stdexcept>
#include <string>

namespace gaitcoord {

/// Base class for all gaitcoord errors.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed or inconsistent input data (files, schemas, units).
class InputError : public Error {
public:
    using Error::Error;
};

/// Mathematically invalid request (non-finite input, degenerate model,
/// unsolvable constraint).
class DomainError : public Error {
public:
    using Error::Error;
};

} // namespace gaitcoord
