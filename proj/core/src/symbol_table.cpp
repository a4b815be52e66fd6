#include "b23/symbol_table.hpp"

#include <stdexcept>

#include "b23/encoding.hpp"

namespace b23 {
namespace {

// The 81 symbols in code order: capitals and period, lowercase and space,
// then punctuation. The layout puts the most frequent letters (and the most
// common word-initial capitals) on codes containing a (1,2) pair, which
// compress to 6 bits instead of 8. Row 20 repeats 'T' in the source table;
// corrected mode puts the otherwise missing 'E' there. The radical sign at
// row 58 has no ASCII form and is carried as '#'; rows 67/68 are the ASCII
// quotes.
constexpr std::array<char, SymbolTable::size> kStrictSymbols = {
    'W', 'N', 'B', 'C', 'D', 'T', 'F', 'G', 'H', 'P', 'J', 'K', 'L', 'M',
    'A', 'O', 'I', 'S', 'R', 'Q', 'T', 'U', 'V', '.', 'X', 'Y', 'Z',
    'z', 'p', 'b', 'w', 'x', 'e', 'f', 'g', 'v', 'q', 'j', 'k', 'y', 'm',
    'n', 'o', 'a', 'i', 'r', 's', 't', 'u', 'h', ' ', 'd', 'l', 'c',
    '!', '$', '^', '%', '#', ',', '*', '/', '=', '<', '>', '@', '&', '\'',
    '"', '?', '(', ')', '{', '}', '[', ']', '\\', ';', ':', '+', '-',
};

std::array<char, SymbolTable::size> symbols_for(TableMode mode) {
    std::array<char, SymbolTable::size> symbols = kStrictSymbols;
    if (mode == TableMode::corrected) symbols[20] = 'E';
    return symbols;
}

std::array<Trit, SymbolTable::code_width> code_of(std::size_t row) {
    std::array<Trit, SymbolTable::code_width> code;
    for (std::size_t i = 0; i < SymbolTable::code_width; ++i) {
        code[SymbolTable::code_width - 1 - i] = Trit(static_cast<int>(row % 3));
        row /= 3;
    }
    return code;
}

}  // namespace

std::string_view to_string(TableMode mode) {
    return mode == TableMode::corrected ? "corrected" : "strict-paper";
}

SymbolTable::SymbolTable(TableMode mode) : mode_(mode) {
    const auto symbols = symbols_for(mode);
    row_of_char_.fill(-1);
    for (std::size_t row = 0; row < size; ++row) {
        Entry& entry = entries_[row];
        entry.symbol = symbols[row];
        entry.code = code_of(row);
        entry.bits = encode_b23(TritString(entry.code.begin(), entry.code.end()));
        // Duplicate symbols (strict-paper 'T') keep the lower-numbered row.
        auto slot = static_cast<unsigned char>(entry.symbol);
        if (row_of_char_[slot] < 0) row_of_char_[slot] = static_cast<std::int16_t>(row);
    }
}

const SymbolTable& SymbolTable::corrected() {
    static const SymbolTable table(TableMode::corrected);
    return table;
}

const SymbolTable& SymbolTable::strict_paper() {
    static const SymbolTable table(TableMode::strict_paper);
    return table;
}

const SymbolTable& SymbolTable::for_mode(TableMode mode) {
    return mode == TableMode::corrected ? corrected() : strict_paper();
}

bool SymbolTable::contains(char ch) const noexcept {
    return row_of_char_[static_cast<unsigned char>(ch)] >= 0;
}

const SymbolTable::Entry& SymbolTable::entry_for(char ch, std::size_t position) const {
    std::int16_t row = row_of_char_[static_cast<unsigned char>(ch)];
    if (row < 0) throw UnsupportedCharacterError(ch, position);
    return entries_[static_cast<std::size_t>(row)];
}

TritString SymbolTable::trits_for(char ch) const {
    const Entry& entry = entry_for(ch);
    return TritString(entry.code.begin(), entry.code.end());
}

char SymbolTable::symbol_for(std::span<const Trit> code) const {
    if (code.size() != code_width) {
        throw std::invalid_argument("symbol code must have exactly 4 trits");
    }
    std::size_t row = 0;
    for (Trit t : code) row = row * 3 + static_cast<std::size_t>(t.value());
    return entries_[row].symbol;
}

std::string SymbolTable::dump() const {
    std::string out;
    for (std::size_t row = 0; row < size; ++row) {
        const Entry& entry = entries_[row];
        out += std::to_string(row);
        out += '\t';
        out += entry.symbol;
        out += '\t';
        for (Trit t : entry.code) out += t.digit();
        out += '\t';
        out += entry.bits.to_string();
        out += '\n';
    }
    return out;
}

const FrequencyTable& FrequencyTable::english() {
    static const FrequencyTable table = {
        .letters = {{{'a', 8.167}, {'b', 1.492}, {'c', 2.782}, {'d', 4.253},
                     {'e', 12.702}, {'f', 2.228}, {'g', 2.015}, {'h', 6.094},
                     {'i', 6.966}, {'j', 0.153}, {'k', 0.772}, {'l', 4.025},
                     {'m', 2.406}, {'n', 6.749}, {'o', 7.507}, {'p', 1.929},
                     {'q', 0.095}, {'r', 5.987}, {'s', 6.327}, {'t', 9.056},
                     {'u', 2.758}, {'v', 0.978}, {'w', 2.360}, {'x', 0.150},
                     {'y', 1.974}, {'z', 0.074}}},
        .first_letters = {{{'T', 15.94}, {'A', 15.5}, {'I', 8.23}, {'S', 7.75},
                           {'O', 7.12}, {'C', 5.97}, {'M', 4.26}, {'F', 4.08},
                           {'P', 4.0}, {'W', 3.82}}},
    };
    return table;
}

double FrequencyTable::letter(char ch) const {
    if (ch < 'a' || ch > 'z') {
        throw std::out_of_range("no frequency entry for this character");
    }
    return letters[static_cast<std::size_t>(ch - 'a')].second;
}

}  // namespace b23
