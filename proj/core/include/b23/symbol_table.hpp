#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>

#include "b23/bitstream.hpp"
#include "b23/error.hpp"
#include "b23/trit.hpp"

namespace b23 {

enum class TableMode : std::uint8_t {
    /// Row 20 holds 'E'. The character column is a bijection; this is the
    /// default and the only mode in which every uppercase letter encodes.
    corrected = 0,
    /// Row 20 holds 'T' verbatim, so 'T' owns two codes and 'E' none.
    /// Encoding picks the lower-numbered code (0012); decoding maps both
    /// 0012 and 0202 to 'T'.
    strict_paper = 1,
};

std::string_view to_string(TableMode mode);

/// The 81-symbol coding table: characters paired with the 4-trit codes
/// 0000..2222 in numeric order, plus each symbol's precomputed compressed
/// bit string. Immutable after construction; share freely across threads.
class SymbolTable {
public:
    static constexpr std::size_t size = 81;
    static constexpr std::size_t code_width = 4;

    struct Entry {
        char symbol;
        std::array<Trit, code_width> code;  // base-3 digits of the row number
        Bitstream bits;                     // compressed form of `code`
    };

    static const SymbolTable& corrected();
    static const SymbolTable& strict_paper();
    static const SymbolTable& for_mode(TableMode mode);

    TableMode mode() const noexcept { return mode_; }

    /// All 81 rows, ordered by code value.
    std::span<const Entry> entries() const noexcept { return entries_; }

    bool contains(char ch) const noexcept;

    /// Row for a character. Throws UnsupportedCharacterError carrying `ch`
    /// and `position` (pass the offset within the source text when known).
    const Entry& entry_for(char ch, std::size_t position = no_position) const;

    /// The character's 4-trit code. In strict-paper mode 'T' yields 0012.
    TritString trits_for(char ch) const;

    /// Inverse lookup; `code` must hold exactly 4 trits. Total: all 81
    /// length-4 codes are assigned.
    char symbol_for(std::span<const Trit> code) const;

    /// One row per entry: decimal<TAB>symbol<TAB>ternary<TAB>b23bits.
    std::string dump() const;

private:
    explicit SymbolTable(TableMode mode);

    std::array<Entry, size> entries_;
    std::array<std::int16_t, 256> row_of_char_;  // -1 where unsupported
    TableMode mode_;
};

/// English letter frequencies (percent): the 26 lowercase letters, and the
/// ten most common word-initial uppercase letters.
struct FrequencyTable {
    std::array<std::pair<char, double>, 26> letters;        // 'a'..'z'
    std::array<std::pair<char, double>, 10> first_letters;  // descending frequency

    static const FrequencyTable& english();

    /// Frequency of a lowercase letter; throws std::out_of_range otherwise.
    double letter(char ch) const;
};

}  // namespace b23
