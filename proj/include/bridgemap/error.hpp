#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace bridgemap {

/// Base class of every error thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Argument outside an operation's domain (bad range, violated normalization, ...).
class InvalidInput : public Error {
public:
    using Error::Error;
};

/// Malformed text; `position` is the 0-based offset of the offending character.
class ParseError : public InvalidInput {
public:
    ParseError(const std::string& what, std::size_t position)
        : InvalidInput(what + " at position " + std::to_string(position)), position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

/// A continued fraction that evaluates to 0, 1, an integer or infinity.
class NotAKnot : public InvalidInput {
public:
    using InvalidInput::InvalidInput;
};

/// A fraction with even denominator: a 2-bridge link rather than a knot.
class LinkNotKnot : public InvalidInput {
public:
    using InvalidInput::InvalidInput;
};

/// Two independent computations of the same quantity disagreed.
class ConsistencyError : public Error {
public:
    using Error::Error;
};

}  // namespace bridgemap
