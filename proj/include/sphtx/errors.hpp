#ifndef SPHTX_ERRORS_HPP
#define SPHTX_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace sphtx {

/// Base class for all sphtx exceptions.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Scenario or parameter validation failures (CLI exit code 2).
class ValidationError : public Error {
public:
    using Error::Error;
};

class OverlapError : public ValidationError {
public:
    using ValidationError::ValidationError;
};

class DomainError : public ValidationError {
public:
    using ValidationError::ValidationError;
};

class DimensionError : public ValidationError {
public:
    using ValidationError::ValidationError;
};

class KindError : public ValidationError {
public:
    using ValidationError::ValidationError;
};

class ModelError : public ValidationError {
public:
    using ValidationError::ValidationError;
};

class GridMismatchError : public ValidationError {
public:
    using ValidationError::ValidationError;
};

class EmptyCurveError : public ValidationError {
public:
    using ValidationError::ValidationError;
};

/// Config file syntax problems, with line/key diagnostics in the message.
class ParseError : public ValidationError {
public:
    using ValidationError::ValidationError;
};

/// Adaptive quadrature ran out of subdivisions (CLI exit code 3).
class ConvergenceError : public Error {
public:
    using Error::Error;
};

/// File I/O failures (CLI exit code 4).
class IoError : public Error {
public:
    using Error::Error;
};

} // namespace sphtx

#endif
