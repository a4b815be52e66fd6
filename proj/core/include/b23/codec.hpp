#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "b23/bitstream.hpp"
#include "b23/encoding.hpp"
#include "b23/symbol_table.hpp"

namespace b23 {

/// On-disk envelope for a compressed document.
///
/// Layout, bit-exact:
///   bytes 0..2   magic "B23"
///   byte  3      format version (currently 1)
///   byte  4      table mode (0 = corrected, 1 = strict-paper)
///   bytes 5..12  payload bit count, big-endian 64-bit
///   bytes 13..   payload, MSB-first, zero pad bits
struct Container {
    static constexpr std::array<std::uint8_t, 3> magic = {0x42, 0x32, 0x33};  // "B23"
    static constexpr std::uint8_t version = 1;
    static constexpr std::size_t header_size = 13;

    TableMode table_mode = TableMode::corrected;
    Bitstream payload;

    std::vector<std::uint8_t> serialize() const;

    /// Throws ContainerError on bad magic or version, truncation, trailing
    /// bytes, an odd bit count, or nonzero pad bits.
    static Container parse(std::span<const std::uint8_t> data);
};

struct CompressionStats {
    std::size_t input_chars = 0;
    std::size_t b23_bits = 0;
    std::size_t a23_bits = 0;        // fixed-width form: 8 bits per character
    std::size_t baseline_bits = 0;   // 8-bit character baseline
    std::size_t pairs_fused = 0;     // within-character fusions (the codec's count)
    std::size_t cross_boundary_pairs = 0;  // extra fusions a whole-stream scan would add
    double ratio_vs_baseline = 0.0;  // b23_bits / baseline_bits, 0 for empty input
};

/// Compresses text by concatenating each character's precomputed bit string.
/// Fusion never crosses a character boundary, so the output matches the
/// per-symbol table exactly. Throws UnsupportedCharacterError with the
/// offending character and its offset.
Container compress(std::string_view text, const SymbolTable& table);

/// Inverse of compress. Payload bits decode to trits, which are read in
/// groups of four. Throws ContainerError if the trit count is not a
/// multiple of four ("corrupt or truncated payload").
std::string decompress(const Container& container, const SymbolTable& table);

/// Convenience overload using the table mode recorded in the container.
std::string decompress(const Container& container);

/// Exact bit counts for the compressed, fixed-width and 8-bit forms.
CompressionStats stats(std::string_view text, const SymbolTable& table);

/// A symbol-to-codeword assignment produced by pairing the most probable
/// symbols with the most fusible codewords.
struct CodeAssignment {
    struct Pair {
        char symbol;
        TritString codeword;
    };
    std::vector<Pair> pairs;
};

/// Sorts the alphabet by descending probability and the codewords by
/// descending fused-pair count (both stably, so ties keep input order) and
/// pairs them index by index. Requires at least as many codewords as
/// symbols, nonnegative probabilities, and distinct codewords.
CodeAssignment assign_codes(std::span<const std::pair<char, double>> alphabet,
                            std::span<const TritString> codewords);

}  // namespace b23
