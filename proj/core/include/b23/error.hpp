#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace b23 {

/// Position value meaning "no offset information available".
inline constexpr std::size_t no_position = static_cast<std::size_t>(-1);

/// Base class for all b23 errors.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed textual input (trit strings, bit strings). Carries the offset
/// of the first offending character.
class ParseError : public Error {
public:
    ParseError(const std::string& message, std::size_t position)
        : Error(message), position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

/// A character outside the 81-symbol coding table.
class UnsupportedCharacterError : public Error {
public:
    UnsupportedCharacterError(char ch, std::size_t position);

    char character() const noexcept { return character_; }
    std::size_t position() const noexcept { return position_; }

private:
    char character_;
    std::size_t position_;
};

/// Invalid bitstream handed to a decoder (odd length, forbidden group).
class DecodeError : public Error {
public:
    using Error::Error;
};

/// Malformed or corrupt container (bad magic, truncation, bad lengths).
class ContainerError : public Error {
public:
    using Error::Error;
};

}  // namespace b23
