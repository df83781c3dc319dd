#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace swk {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed graph data: duplicate identifiers, dangling references, bad morphisms.
class GraphError : public Error {
public:
    using Error::Error;
};

/// A caller violated an operation's precondition.
class PreconditionError : public Error {
public:
    using Error::Error;
};

/// Inconsistent linear-algebra input (dimension mismatch, d*d != 0, non chain map).
class LinalgError : public Error {
public:
    using Error::Error;
};

/// Graph text-format error carrying a 1-based source position.
class ParseError : public Error {
public:
    ParseError(std::string message, std::size_t line, std::size_t column)
        : Error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message),
          line_(line),
          column_(column)
    {
    }

    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

} // namespace swk
