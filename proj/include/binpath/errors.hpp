#pragma once

#include <stdexcept>
#include <string>

namespace binpath {

// Input text could not be parsed as an edge-list network.
class ParseError : public std::runtime_error {
public:
    ParseError(int line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
    explicit ParseError(const std::string& what) : std::runtime_error(what), line_(0) {}

    // 1-based input line, 0 when the error is not tied to a line.
    int line() const { return line_; }

private:
    int line_;
};

// An exhaustive scan was requested above the safety cap without the override flag.
class CapExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Raised by operations whose precondition is an existing source-sink path.
class NoPathError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace binpath
