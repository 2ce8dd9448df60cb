#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace adfkit {

/// Base class of every exception thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Operation called outside its domain (mismatched interpretations, non-parent sets, ...).
class DomainError : public Error {
public:
    using Error::Error;
};

/// A structurally well-formed ADF that violates a model invariant.
class ValidationError : public Error {
public:
    using Error::Error;
};

/// Error in an instance file. Line and column are 1-based.
class ParseError : public Error {
public:
    ParseError(std::size_t line, std::size_t column, const std::string& msg)
        : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + msg)
        , line_(line)
        , column_(column)
        , message_(msg) {}

    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }
    const std::string& message() const noexcept { return message_; }

private:
    std::size_t line_;
    std::size_t column_;
    std::string message_;
};

/// Broken internal invariant; signals a bug rather than bad input.
class InternalError : public Error {
public:
    using Error::Error;
};

} // namespace adfkit
