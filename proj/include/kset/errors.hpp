#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace kset {

// Root of every exception thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ZeroDivision : public Error {
public:
    ZeroDivision() : Error("division by zero in cyclotomic field") {}
};

class DimensionMismatch : public Error {
public:
    DimensionMismatch(std::size_t a, std::size_t b)
        : Error("dimension mismatch: " + std::to_string(a) + " vs " + std::to_string(b)) {}
};

// A set failed validation where a valid one was required. The message holds the report.
class InvalidSet : public Error {
public:
    using Error::Error;
};

class NotKS : public Error {
public:
    using Error::Error;
};

class NotParity : public Error {
public:
    using Error::Error;
};

class InvalidPairing : public Error {
public:
    using Error::Error;
};

class BadDimension : public Error {
public:
    using Error::Error;
};

class BadV : public Error {
public:
    using Error::Error;
};

class NotScaledUnitary : public Error {
public:
    using Error::Error;
};

class UnknownName : public Error {
public:
    explicit UnknownName(const std::string& name) : Error("unknown catalog entry: " + name) {}
};

// Set-file and scalar parse failures carry a 1-based position.
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t line, std::size_t column)
        : Error(format(what, line, column)), line_(line), column_(column) {}

    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    static std::string format(const std::string& what, std::size_t line, std::size_t column) {
        if (line == 0) return what;
        return "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what;
    }

    std::size_t line_;
    std::size_t column_;
};

class SyntaxError : public ParseError {
public:
    using ParseError::ParseError;
};

class UnknownRayReference : public ParseError {
public:
    using ParseError::ParseError;
};

}  // namespace kset
