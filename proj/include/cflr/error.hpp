#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cflr {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed grammar DSL, graph file, plan file or matrix text.
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

/// An operation was called outside its domain (non-linear grammar passed to the
/// linear solver, join-inducing grammar to the join-free path, even k, ...).
class PreconditionError : public Error {
public:
    using Error::Error;
};

/// Unknown vertex, preset or symbol name.
class LookupError : public Error {
public:
    using Error::Error;
};

/// Brute-force oracle refused an instance larger than its hard size limit.
class GuardrailError : public Error {
public:
    using Error::Error;
};

}  // namespace cflr
