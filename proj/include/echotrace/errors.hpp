#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace echotrace {

// Argument outside an operation's domain (bad dimensions, out-of-range values).
class domain_error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Malformed file content. byte_offset() points at the failing position.
class parse_error : public std::runtime_error {
public:
    parse_error(const std::string& what, std::size_t byte_offset)
        : std::runtime_error(what + " (byte " + std::to_string(byte_offset) + ")"),
          offset_(byte_offset) {}

    std::size_t byte_offset() const noexcept { return offset_; }

private:
    std::size_t offset_ = 0;
};

// A required input file, directory, or model is absent or of the wrong kind.
class missing_artifact : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Training or evaluation produced a non-finite value.
class numeric_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace echotrace
