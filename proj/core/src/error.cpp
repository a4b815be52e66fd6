#include "b23/error.hpp"

#include <cctype>

namespace b23 {
namespace {

std::string describe(char ch, std::size_t position) {
    std::string msg = "unsupported character ";
    auto byte = static_cast<unsigned char>(ch);
    if (std::isprint(byte)) {
        msg += '\'';
        msg += ch;
        msg += '\'';
    } else {
        constexpr char hex[] = "0123456789abcdef";
        msg += "0x";
        msg += hex[byte >> 4];
        msg += hex[byte & 0xf];
    }
    if (position != no_position) {
        msg += " at offset " + std::to_string(position);
    }
    return msg;
}

}  // namespace

UnsupportedCharacterError::UnsupportedCharacterError(char ch, std::size_t position)
    : Error(describe(ch, position)), character_(ch), position_(position) {}

}  // namespace b23
