#include "b23/encoding.hpp"

namespace b23 {
namespace {

constexpr unsigned kGroupOfTrit[3] = {0b00, 0b01, 0b10};
constexpr unsigned kFusedGroup = 0b11;

unsigned group_at(const Bitstream& bits, std::size_t group_index) {
    unsigned high = bits.bit(2 * group_index) ? 2u : 0u;
    unsigned low = bits.bit(2 * group_index + 1) ? 1u : 0u;
    return high | low;
}

}  // namespace

Bitstream encode_a23(const TritString& trits) {
    Bitstream bits;
    for (Trit t : trits) bits.append_group(kGroupOfTrit[t.value()]);
    return bits;
}

TritString decode_a23(const Bitstream& bits) {
    if (bits.size() % 2 != 0) {
        throw DecodeError("odd bit length (" + std::to_string(bits.size()) + ")");
    }
    TritString trits;
    trits.reserve(bits.size() / 2);
    for (std::size_t g = 0; g < bits.size() / 2; ++g) {
        unsigned group = group_at(bits, g);
        if (group == kFusedGroup) {
            throw DecodeError("invalid A23 group 11 at bit offset " + std::to_string(2 * g));
        }
        trits.emplace_back(static_cast<int>(group));
    }
    return trits;
}

Bitstream encode_b23(const TritString& trits) {
    Bitstream bits;
    std::size_t i = 0;
    while (i < trits.size()) {
        if (trits[i].value() == 1 && i + 1 < trits.size() && trits[i + 1].value() == 2) {
            bits.append_group(kFusedGroup);
            i += 2;
        } else {
            bits.append_group(kGroupOfTrit[trits[i].value()]);
            i += 1;
        }
    }
    return bits;
}

TritString decode_b23(const Bitstream& bits) {
    if (bits.size() % 2 != 0) {
        throw DecodeError("odd bit length (" + std::to_string(bits.size()) + ")");
    }
    TritString trits;
    trits.reserve(bits.size());
    for (std::size_t g = 0; g < bits.size() / 2; ++g) {
        unsigned group = group_at(bits, g);
        if (group == kFusedGroup) {
            trits.emplace_back(1);
            trits.emplace_back(2);
        } else {
            trits.emplace_back(static_cast<int>(group));
        }
    }
    return trits;
}

std::size_t count_12_pairs(const TritString& trits) {
    std::size_t pairs = 0;
    std::size_t i = 0;
    while (i < trits.size()) {
        if (trits[i].value() == 1 && i + 1 < trits.size() && trits[i + 1].value() == 2) {
            ++pairs;
            i += 2;
        } else {
            i += 1;
        }
    }
    return pairs;
}

}  // namespace b23
