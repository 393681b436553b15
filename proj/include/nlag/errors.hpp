#pragma once

#include <stdexcept>
#include <string>

namespace nlag {

/// Base class for every error thrown by the library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Expression text failed to parse. `position` is a 1-based character index.
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t position)
        : Error(what + " (at position " + std::to_string(position) + ")"),
          position_(position) {}

    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

/// A monomial exceeded the configured total-degree cap.
class DegreeCapError : public Error {
public:
    using Error::Error;
};

/// An operation received symbols from both frames, or from the wrong frame.
class FrameError : public Error {
public:
    using Error::Error;
};

/// A gauge function was requested for a Lagrangian that is not null.
class NotNullError : public Error {
public:
    using Error::Error;
};

/// Linear solving over the symbolic constants failed.
class SolveError : public Error {
public:
    using Error::Error;
};

/// Numeric evaluation hit a symbol with no binding.
class UnboundSymbolError : public Error {
public:
    using Error::Error;
};

/// A domain-type invariant was violated at construction.
class InvariantError : public Error {
public:
    using Error::Error;
};

} // namespace nlag
