#include "b23/codec.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace b23 {
namespace {

void require(bool condition, const char* message) {
    if (!condition) throw ContainerError(message);
}

}  // namespace

std::vector<std::uint8_t> Container::serialize() const {
    std::vector<std::uint8_t> out;
    out.reserve(header_size + payload.bytes().size());
    for (std::uint8_t byte : magic) out.push_back(byte);
    out.push_back(version);
    out.push_back(static_cast<std::uint8_t>(table_mode));
    std::uint64_t bit_count = payload.size();
    for (int shift = 56; shift >= 0; shift -= 8) {
        out.push_back(static_cast<std::uint8_t>(bit_count >> shift));
    }
    out.insert(out.end(), payload.bytes().begin(), payload.bytes().end());
    return out;
}

Container Container::parse(std::span<const std::uint8_t> data) {
    require(data.size() >= header_size, "truncated header");
    require(std::equal(magic.begin(), magic.end(), data.begin()), "bad magic");
    require(data[3] == version, "unsupported container version");
    require(data[4] <= 1, "bad table-mode flag");

    std::uint64_t bit_count = 0;
    for (std::size_t i = 0; i < 8; ++i) bit_count = bit_count << 8 | data[5 + i];
    require(bit_count % 2 == 0, "odd payload bit length");

    std::span<const std::uint8_t> body = data.subspan(header_size);
    std::uint64_t expected_bytes = bit_count / 8 + (bit_count % 8 != 0);
    require(body.size() >= expected_bytes, "declared bit length exceeds payload");
    require(body.size() <= expected_bytes, "trailing bytes after payload");

    Container container;
    container.table_mode = static_cast<TableMode>(data[4]);
    try {
        container.payload = Bitstream::from_bytes(
            std::vector<std::uint8_t>(body.begin(), body.end()),
            static_cast<std::size_t>(bit_count));
    } catch (const std::invalid_argument&) {
        throw ContainerError("nonzero pad bits");
    }
    return container;
}

Container compress(std::string_view text, const SymbolTable& table) {
    Container container;
    container.table_mode = table.mode();
    for (std::size_t i = 0; i < text.size(); ++i) {
        const auto& entry = table.entry_for(text[i], i);
        for (std::size_t b = 0; b < entry.bits.size(); ++b) {
            container.payload.push_back(entry.bits.bit(b));
        }
    }
    return container;
}

std::string decompress(const Container& container, const SymbolTable& table) {
    TritString trits = decode_b23(container.payload);
    if (trits.size() % SymbolTable::code_width != 0) {
        throw ContainerError("corrupt or truncated payload: trit count " +
                             std::to_string(trits.size()) + " is not a multiple of 4");
    }
    std::string text;
    text.reserve(trits.size() / SymbolTable::code_width);
    for (std::size_t i = 0; i < trits.size(); i += SymbolTable::code_width) {
        text += table.symbol_for(std::span(trits).subspan(i, SymbolTable::code_width));
    }
    return text;
}

std::string decompress(const Container& container) {
    return decompress(container, SymbolTable::for_mode(container.table_mode));
}

CompressionStats stats(std::string_view text, const SymbolTable& table) {
    CompressionStats s;
    s.input_chars = text.size();
    s.a23_bits = 8 * text.size();
    s.baseline_bits = 8 * text.size();

    TritString all_trits;
    all_trits.reserve(SymbolTable::code_width * text.size());
    for (std::size_t i = 0; i < text.size(); ++i) {
        const auto& entry = table.entry_for(text[i], i);
        s.b23_bits += entry.bits.size();
        all_trits.insert(all_trits.end(), entry.code.begin(), entry.code.end());
    }
    s.pairs_fused = (s.a23_bits - s.b23_bits) / 2;
    s.cross_boundary_pairs = count_12_pairs(all_trits) - s.pairs_fused;
    if (s.baseline_bits > 0) {
        s.ratio_vs_baseline =
            static_cast<double>(s.b23_bits) / static_cast<double>(s.baseline_bits);
    }
    return s;
}

CodeAssignment assign_codes(std::span<const std::pair<char, double>> alphabet,
                            std::span<const TritString> codewords) {
    if (alphabet.size() > codewords.size()) {
        throw std::invalid_argument("fewer codewords than symbols");
    }
    for (const auto& [symbol, probability] : alphabet) {
        if (probability < 0.0) throw std::invalid_argument("negative probability");
    }
    {
        std::set<TritString> distinct(codewords.begin(), codewords.end());
        if (distinct.size() != codewords.size()) {
            throw std::invalid_argument("codewords must be distinct");
        }
    }

    std::vector<std::size_t> by_probability(alphabet.size());
    std::iota(by_probability.begin(), by_probability.end(), 0);
    std::stable_sort(by_probability.begin(), by_probability.end(),
                     [&](std::size_t a, std::size_t b) {
                         return alphabet[a].second > alphabet[b].second;
                     });

    std::vector<std::size_t> by_delta(codewords.size());
    std::iota(by_delta.begin(), by_delta.end(), 0);
    std::stable_sort(by_delta.begin(), by_delta.end(), [&](std::size_t a, std::size_t b) {
        return count_12_pairs(codewords[a]) > count_12_pairs(codewords[b]);
    });

    CodeAssignment assignment;
    assignment.pairs.reserve(alphabet.size());
    for (std::size_t i = 0; i < alphabet.size(); ++i) {
        assignment.pairs.push_back(
            {alphabet[by_probability[i]].first, codewords[by_delta[i]]});
    }
    return assignment;
}

}  // namespace b23
