#pragma once

#include <stdexcept>
#include <string>

namespace chrobak {

// Malformed or semantically invalid textual input. `line` is 1-based.
class ParseError : public std::runtime_error {
public:
    ParseError(int line, const std::string& message)
        : std::runtime_error("line " + std::to_string(line) + ": " + message),
          line_(line) {}

    int line() const { return line_; }

private:
    int line_;
};

// A configured resource limit would be exceeded: determinization size,
// enumeration budget, lcm ceiling, or the exact-arithmetic range guard.
class LimitError : public std::runtime_error {
public:
    explicit LimitError(const std::string& message) : std::runtime_error(message) {}
};

} // namespace chrobak
