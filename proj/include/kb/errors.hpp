#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace kb {

/// Base type for every domain error thrown by this library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& message) : std::runtime_error(message) {}
};

/// A score entry was negative.
class NegativeScoreError : public Error {
public:
    using Error::Error;
};

/// A score entry was NaN or infinite.
class NonFiniteError : public Error {
public:
    using Error::Error;
};

/// A scale factor was zero or negative.
class NonPositiveScaleError : public Error {
public:
    using Error::Error;
};

/// A split does not lie strictly inside the chosen entry.
class InvalidSplitError : public Error {
public:
    using Error::Error;
};

class UnknownSchemeError : public Error {
public:
    using Error::Error;
};

class UnknownClubError : public Error {
public:
    using Error::Error;
};

class UnknownCountryError : public Error {
public:
    using Error::Error;
};

class UnknownEntityError : public Error {
public:
    using Error::Error;
};

/// Requested window length exceeds the seasons available.
class WindowTooLongError : public Error {
public:
    using Error::Error;
};

/// Every entity in scope has index value zero for the window.
class AllZeroError : public Error {
public:
    using Error::Error;
};

/// Malformed CSV input; carries the 1-based line number.
class SyntaxError : public Error {
public:
    SyntaxError(std::size_t line, const std::string& message)
        : Error("line " + std::to_string(line) + ": " + message), line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

/// Dataset violates the structural rules (stage multiplicities, duplicate
/// club-seasons, or a club mapped to several countries).
class ValidationError : public Error {
public:
    using Error::Error;
};

}  // namespace kb
