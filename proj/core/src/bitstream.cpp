#include "b23/bitstream.hpp"

#include <stdexcept>

namespace b23 {

Bitstream Bitstream::from_bytes(std::vector<std::uint8_t> bytes, std::size_t bit_count) {
    // overflow-safe ceil(bit_count / 8)
    if (bytes.size() != bit_count / 8 + (bit_count % 8 != 0)) {
        throw std::invalid_argument("byte count does not match bit count");
    }
    if (bit_count % 8 != 0 && !bytes.empty()) {
        std::uint8_t pad_mask = static_cast<std::uint8_t>(0xff >> (bit_count % 8));
        if ((bytes.back() & pad_mask) != 0) {
            throw std::invalid_argument("nonzero pad bits");
        }
    }
    Bitstream bits;
    bits.bytes_ = std::move(bytes);
    bits.bit_count_ = bit_count;
    return bits;
}

Bitstream Bitstream::parse(std::string_view text) {
    Bitstream bits;
    for (std::size_t i = 0; i < text.size(); ++i) {
        char ch = text[i];
        if (ch != '0' && ch != '1') {
            throw ParseError("invalid bit character at offset " + std::to_string(i) +
                                 ": expected '0' or '1'",
                             i);
        }
        bits.push_back(ch == '1');
    }
    return bits;
}

void Bitstream::push_back(bool bit) {
    std::size_t offset = bit_count_ % 8;
    if (offset == 0) bytes_.push_back(0);
    if (bit) bytes_.back() |= static_cast<std::uint8_t>(0x80u >> offset);
    ++bit_count_;
}

void Bitstream::append_group(unsigned value) {
    if (value > 3) throw std::invalid_argument("2-bit group value out of range");
    push_back((value & 2u) != 0);
    push_back((value & 1u) != 0);
}

bool Bitstream::bit(std::size_t index) const {
    if (index >= bit_count_) throw std::out_of_range("bit index out of range");
    return (bytes_[index / 8] >> (7 - index % 8)) & 1u;
}

std::string Bitstream::to_string() const {
    std::string text;
    text.reserve(bit_count_);
    for (std::size_t i = 0; i < bit_count_; ++i) text += bit(i) ? '1' : '0';
    return text;
}

}  // namespace b23
