#pragma once

#include <stdexcept>
#include <string>

namespace troplin {

/// Base class of every exception thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A caller violated an operation's precondition (wrong sizes, a subset that
/// is not a basis, a point outside the required region, ...).
class InvalidArgument : public Error {
public:
    using Error::Error;
};

/// Malformed serialized input. `field()` names the offending JSON path.
class FormatError : public Error {
public:
    FormatError(std::string field, const std::string& message)
        : Error(field + ": " + message), field_(std::move(field)) {}

    const std::string& field() const noexcept { return field_; }

private:
    std::string field_;
};

/// An enumeration exceeded its configured limit.
class LimitExceeded : public Error {
public:
    using Error::Error;
};

/// Two independent routes disagreed, or a guaranteed object was not found.
/// Always signals a bug (or an unvalidated input slipping through).
class InternalError : public Error {
public:
    using Error::Error;
};

}  // namespace troplin
