#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "b23/error.hpp"

namespace b23 {

/// One base-3 digit. The only valid values are 0, 1 and 2; constructing
/// anything else throws.
class Trit {
public:
    constexpr Trit() noexcept : value_(0) {}

    explicit constexpr Trit(int value)
        : value_(value >= 0 && value <= 2
                     ? static_cast<std::uint8_t>(value)
                     : throw std::invalid_argument("trit value must be 0, 1 or 2, got " +
                                                   std::to_string(value))) {}

    constexpr int value() const noexcept { return value_; }

    constexpr char digit() const noexcept { return static_cast<char>('0' + value_); }

    friend constexpr auto operator<=>(Trit, Trit) noexcept = default;

private:
    std::uint8_t value_;
};

/// A finite sequence of trits, most significant first.
using TritString = std::vector<Trit>;

/// Parses a string of '0'/'1'/'2' characters. Throws ParseError with the
/// offset of the first invalid character.
TritString parse_trits(std::string_view text);

/// Renders a trit string back to its '0'/'1'/'2' text form.
std::string to_string(const TritString& trits);

/// Base-3 representation of n, most significant trit first. No leading
/// zeros; to_ternary(0) is the single trit 0.
TritString to_ternary(std::uint64_t n);

}  // namespace b23
