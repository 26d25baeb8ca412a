#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace braidrep {

/// Base class for all errors raised by the library.
class error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Bad input: ring mismatch, shape mismatch, out-of-range index, non-pure
/// braid where purity is required, malformed text, and so on.
class validation_error : public error {
public:
    using error::error;
};

/// Malformed braid text. Carries the byte offset of the first bad character.
class parse_error : public validation_error {
public:
    parse_error(const std::string& msg, std::size_t offset)
        : validation_error(msg + " (at byte " + std::to_string(offset) + ")"),
          offset_(offset) {}
    std::size_t offset() const { return offset_; }

private:
    std::size_t offset_;
};

/// A configurable resource budget was exceeded (formal monomial counts,
/// state enumeration sizes). Never raised for well-formed small inputs.
class budget_error : public error {
public:
    using error::error;
};

/// An internal cross-route identity failed. This indicates a bug, not a
/// user error, and should never occur.
class internal_error : public error {
public:
    using error::error;
};

}  // namespace braidrep
