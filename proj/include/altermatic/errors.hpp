#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace altermatic {

/// Invalid argument or violated precondition.
class ArgumentError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Malformed input file. Carries the 1-based line number (0 when not tied to a line).
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string& what)
        : std::runtime_error(line == 0 ? what : "line " + std::to_string(line) + ": " + what),
          line_(line)
    {
    }

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

/// A configured resource cap (vertex count, factorial cap, step cap) was exceeded.
class ResourceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace altermatic
