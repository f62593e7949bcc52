#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace fintop {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Two values that must live over the same carrier do not.
class CarrierMismatch : public Error {
public:
    using Error::Error;
};

class PreconditionError : public Error {
public:
    using Error::Error;
};

// Raised by maximal_open_representative when V is not the trace of any open set.
class NotRelativelyOpen : public Error {
public:
    using Error::Error;
};

// A closure table that does not cover every subset of its carrier.
class PartialTable : public Error {
public:
    using Error::Error;
};

// A size outside the enumerable range (carrier above 16, census above its limit).
class LimitExceeded : public Error {
public:
    using Error::Error;
};

/// Malformed textual input. location() is "byte N" for syntax errors and a
/// JSON pointer such as "/opens/2" for schema errors.
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t offset) : ParseError(what, "byte " + std::to_string(offset)) {}
    ParseError(const std::string& what, const std::string& location)
        : Error(what + " (at " + location + ")"), location_(location)
    {
    }

    const std::string& location() const noexcept { return location_; }

private:
    std::string location_;
};

} // namespace fintop
