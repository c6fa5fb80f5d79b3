#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace possver {

// Base of everything this library throws.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Bad inputs: wrong shapes, out-of-range values, violated preconditions.
// The CLI maps these to exit code 2.
struct ValidationError : Error {
    using Error::Error;
};

// Filesystem / stream failures. CLI exit code 3.
struct IoError : Error {
    using Error::Error;
};

struct WrongArity : ValidationError {
    using ValidationError::ValidationError;
};
struct OutOfRange : ValidationError {
    using ValidationError::ValidationError;
};
struct AllZero : ValidationError {
    using ValidationError::ValidationError;
};
struct EmptyEvent : ValidationError {
    using ValidationError::ValidationError;
};
struct EmptySample : ValidationError {
    using ValidationError::ValidationError;
};
struct InvalidEpsilon : ValidationError {
    using ValidationError::ValidationError;
};
struct UniverseMismatch : ValidationError {
    using ValidationError::ValidationError;
};
struct MissingClimatology : ValidationError {
    using ValidationError::ValidationError;
};
struct BadThreshold : ValidationError {
    using ValidationError::ValidationError;
};
struct InvalidConfig : ValidationError {
    using ValidationError::ValidationError;
};
struct UnpairedSamples : ValidationError {
    using ValidationError::ValidationError;
};

// Archive record rejected before it could be validated; carries the 1-based line.
struct ParseError : ValidationError {
    std::size_t line;
    ParseError(std::size_t line_, const std::string& what_)
        : ValidationError("line " + std::to_string(line_) + ": " + what_), line(line_) {}
};

// Archive record parsed but failed forecast/observation validation.
struct RecordValidationError : ValidationError {
    std::size_t line;
    RecordValidationError(std::size_t line_, const std::string& what_)
        : ValidationError("line " + std::to_string(line_) + ": " + what_), line(line_) {}
};

}  // namespace possver
