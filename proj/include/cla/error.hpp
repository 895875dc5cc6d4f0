#pragma once

#include <stdexcept>
#include <string>

namespace cla {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Mismatched lengths, ambient dimensions or matrix shapes.
class DimensionError : public Error {
public:
    using Error::Error;
};

// Invalid field descriptor, or mixing elements of different fields.
class FieldError : public Error {
public:
    using Error::Error;
};

// The operation exists but not over the requested field (e.g. enumeration over Q).
class UnsupportedFieldError : public Error {
public:
    using Error::Error;
};

// A configured dimension or characteristic bound was exceeded.
class ResourceError : public Error {
public:
    using Error::Error;
};

// Malformed input files.
class InputError : public Error {
public:
    using Error::Error;
};

// A precondition on the mathematical input failed (non-ideal, non-cocycle, ...).
class ContractError : public Error {
public:
    using Error::Error;
};

} // namespace cla
