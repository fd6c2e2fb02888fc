#pragma once

#include <stdexcept>
#include <string>

namespace rrhash {

// Base of every exception thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Out-of-domain argument (mask size, ribbon count, attack parameter, ...).
class ParameterError : public Error {
public:
    using Error::Error;
};

// Malformed, degenerate or unreadable image.
class ImageError : public Error {
public:
    using Error::Error;
};

// Vector or matrix dimensions that do not line up.
class ShapeError : public Error {
public:
    using Error::Error;
};

// Hashes that cannot be compared (length, scheme or key mismatch).
class ComparisonError : public Error {
public:
    using Error::Error;
};

class ConfigError : public Error {
public:
    using Error::Error;
};

// Model fitting or model-file failure.
class ModelError : public Error {
public:
    using Error::Error;
};

class IndexError : public Error {
public:
    using Error::Error;
};

class EvaluationError : public Error {
public:
    using Error::Error;
};

}  // namespace rrhash
