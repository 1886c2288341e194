#pragma once

#include <stdexcept>
#include <string>

namespace liext {

/// Base class for every error raised by the library: invalid constructions,
/// violated preconditions, and malformed input files.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Error raised while reading a text file (algebra, datum, matrix, pair).
/// Carries the 1-based line number of the offending line.
class ParseError : public Error {
public:
    ParseError(const std::string& what, int line)
        : Error(what + " (line " + std::to_string(line) + ")"), line_(line) {}

    int line() const { return line_; }

private:
    int line_;
};

}  // namespace liext
