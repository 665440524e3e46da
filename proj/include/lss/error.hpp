#ifndef LSS_ERROR_HPP
#define LSS_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace lss {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed automaton / digraph text. Carries the 1-based line number (0 when unknown).
class ParseError : public Error {
public:
    ParseError(std::size_t line, const std::string& message)
        : Error(line == 0 ? message : "line " + std::to_string(line) + ": " + message),
          line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

/// An operation was called outside its documented domain.
class PreconditionError : public Error {
public:
    using Error::Error;
};

/// A search or oracle refused to run because its budget would be exceeded.
class BudgetError : public Error {
public:
    using Error::Error;
};

} // namespace lss

#endif
