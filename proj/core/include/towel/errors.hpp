#pragma once

#include <stdexcept>
#include <string>

namespace towel {

// Root of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// An interval result could not be enclosed by finite endpoints.
class EnclosureError : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    using Error::Error;
};

// Bad shapes, zero grid counts, invalid endpoints and similar caller mistakes.
class ArgumentError : public Error {
public:
    using Error::Error;
};

// Raised when an interval determinant cannot be separated from zero.
class SingularityError : public Error {
public:
    using Error::Error;
};

} // namespace towel
