#include "b23/trit.hpp"

#include <algorithm>

namespace b23 {

TritString parse_trits(std::string_view text) {
    TritString trits;
    trits.reserve(text.size());
    for (std::size_t i = 0; i < text.size(); ++i) {
        char ch = text[i];
        if (ch < '0' || ch > '2') {
            throw ParseError("invalid trit character at offset " + std::to_string(i) +
                                 ": expected '0', '1' or '2'",
                             i);
        }
        trits.emplace_back(ch - '0');
    }
    return trits;
}

std::string to_string(const TritString& trits) {
    std::string text;
    text.reserve(trits.size());
    for (Trit t : trits) text += t.digit();
    return text;
}

TritString to_ternary(std::uint64_t n) {
    TritString trits;
    do {
        trits.emplace_back(static_cast<int>(n % 3));
        n /= 3;
    } while (n != 0);
    std::reverse(trits.begin(), trits.end());
    return trits;
}

}  // namespace b23
