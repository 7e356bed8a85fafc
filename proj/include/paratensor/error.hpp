#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace paratensor {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed input text. `position` is a 1-based character offset into the
/// offending text (0 when unknown); `line` is 1-based when the error comes
/// from a multi-line document.
class ParseError : public Error {
public:
    ParseError(const std::string& message, std::size_t position, std::size_t line = 0)
        : Error(format(message, position, line)), position_(position), line_(line) {}

    std::size_t position() const noexcept { return position_; }
    std::size_t line() const noexcept { return line_; }

private:
    static std::string format(const std::string& message, std::size_t position, std::size_t line) {
        std::string where;
        if (line != 0) where += "line " + std::to_string(line) + ", ";
        if (position != 0) where += "column " + std::to_string(position) + ": ";
        else if (!where.empty()) where.replace(where.size() - 2, 2, ": ");
        return where + message;
    }

    std::size_t position_;
    std::size_t line_;
};

/// A mathematically invalid request (zero denominator, singular frame,
/// mismatched dimensions, exponent overflow, ...).
class DomainError : public Error {
public:
    using Error::Error;
};

}  // namespace paratensor
