#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace nwfs {

/// Job (or meta-job) identifier. 32-bit so sequences can feed gather indices directly.
using JobId = std::int32_t;

/// Processing times, delays and makespans, in abstract time units.
using Time = std::int64_t;

/// Caller supplied something outside an operation's precondition.
class InputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Malformed instance text. Carries the 1-based line/column of the offending token.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t line, std::size_t column)
        : std::runtime_error(what + " (line " + std::to_string(line) + ", column " +
                             std::to_string(column) + ")"),
          line_(line), column_(column) {}

    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

/// A super-job block is not contiguous in the permutation being projected.
class ProjectionError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// Work refused because it exceeds a configured safety cap.
class RefusalError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace nwfs
