#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "b23/error.hpp"

namespace b23 {

/// A bit sequence with an explicit bit count, packed MSB-first into bytes.
/// Bit 0 is the high bit of byte 0, matching the left-to-right reading of
/// a printed bit string. Pad bits in the final byte are always zero.
class Bitstream {
public:
    Bitstream() = default;

    /// Wraps packed bytes produced elsewhere. bytes.size() must equal
    /// ceil(bit_count / 8) and the pad bits must be zero.
    static Bitstream from_bytes(std::vector<std::uint8_t> bytes, std::size_t bit_count);

    /// Parses a '0'/'1' string. Throws ParseError on any other character.
    static Bitstream parse(std::string_view text);

    void push_back(bool bit);

    /// Appends one 2-bit group (value 0..3), high bit first.
    void append_group(unsigned value);

    bool bit(std::size_t index) const;

    std::size_t size() const noexcept { return bit_count_; }
    bool empty() const noexcept { return bit_count_ == 0; }

    const std::vector<std::uint8_t>& bytes() const noexcept { return bytes_; }

    std::string to_string() const;

    friend bool operator==(const Bitstream&, const Bitstream&) = default;

private:
    std::vector<std::uint8_t> bytes_;
    std::size_t bit_count_ = 0;
};

}  // namespace b23
