#include <doctest.h>

#include <fstream>
#include <set>
#include <sstream>

#include "b23/symbol_table.hpp"

using namespace b23;

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

std::string fixture(const std::string& name) {
    return std::string(B23_TEST_DATA_DIR) + "/" + name;
}

}  // namespace

TEST_CASE("table has 81 rows whose codes are the 4-trit values in order") {
    for (const SymbolTable* table : {&SymbolTable::corrected(), &SymbolTable::strict_paper()}) {
        REQUIRE(table->entries().size() == 81);
        std::size_t row = 0;
        for (const auto& entry : table->entries()) {
            // independent base-3 expansion of the row number
            std::size_t value = row;
            char digits[4];
            for (int i = 3; i >= 0; --i) {
                digits[i] = static_cast<char>('0' + value % 3);
                value /= 3;
            }
            std::string code;
            for (Trit t : entry.code) code += t.digit();
            REQUIRE(code == std::string(digits, 4));
            ++row;
        }
    }
}

TEST_CASE("corrected mode is a bijection over 81 distinct characters") {
    std::set<char> seen;
    for (const auto& entry : SymbolTable::corrected().entries()) seen.insert(entry.symbol);
    CHECK(seen.size() == 81);
    // every uppercase and lowercase letter is present
    for (char ch = 'a'; ch <= 'z'; ++ch) CHECK(SymbolTable::corrected().contains(ch));
    for (char ch = 'A'; ch <= 'Z'; ++ch) CHECK(SymbolTable::corrected().contains(ch));

    // lookups succeed on exactly the 81 table characters and nothing else
    std::size_t supported = 0;
    for (int byte = 0; byte < 256; ++byte) {
        char ch = static_cast<char>(byte);
        bool in_table = seen.count(ch) > 0;
        REQUIRE(SymbolTable::corrected().contains(ch) == in_table);
        if (in_table) {
            ++supported;
        } else {
            REQUIRE_THROWS_AS(SymbolTable::corrected().trits_for(ch),
                              UnsupportedCharacterError);
        }
    }
    CHECK(supported == 81);
}

TEST_CASE("strict-paper mode keeps the duplicate 'T'") {
    const SymbolTable& strict = SymbolTable::strict_paper();
    CHECK(strict.entries()[5].symbol == 'T');
    CHECK(strict.entries()[20].symbol == 'T');
    CHECK_FALSE(strict.contains('E'));
    // encoding prefers the lower-numbered row
    CHECK(to_string(strict.trits_for('T')) == "0012");
    // both codes decode to 'T'
    CHECK(strict.symbol_for(parse_trits("0012")) == 'T');
    CHECK(strict.symbol_for(parse_trits("0202")) == 'T');
    CHECK_THROWS_AS(strict.entry_for('E'), UnsupportedCharacterError);
}

TEST_CASE("table spot values") {
    const SymbolTable& table = SymbolTable::corrected();
    CHECK(to_string(table.trits_for('W')) == "0000");
    CHECK(to_string(table.trits_for('e')) == "1012");
    CHECK(to_string(table.trits_for(' ')) == "1212");
    CHECK(to_string(table.trits_for('z')) == "1000");
    CHECK(table.symbol_for(parse_trits("0012")) == 'T');
    CHECK(table.symbol_for(parse_trits("2222")) == '-');
    CHECK(table.symbol_for(parse_trits("0202")) == 'E');
}

TEST_CASE("symbol lookup round-trips over the whole table") {
    const SymbolTable& table = SymbolTable::corrected();
    for (const auto& entry : table.entries()) {
        TritString code(entry.code.begin(), entry.code.end());
        char symbol = table.symbol_for(code);
        REQUIRE(symbol == entry.symbol);
        REQUIRE(table.trits_for(symbol) == code);
    }
}

TEST_CASE("unsupported characters are rejected with position context") {
    const SymbolTable& table = SymbolTable::corrected();
    for (char ch : {'7', '0', '\n', '\t', '~', '`', '_', '|'}) {
        CHECK_FALSE(table.contains(ch));
    }
    try {
        table.entry_for('7', 12);
        FAIL("expected UnsupportedCharacterError");
    } catch (const UnsupportedCharacterError& e) {
        CHECK(e.character() == '7');
        CHECK(e.position() == 12);
        CHECK(std::string(e.what()).find("offset 12") != std::string::npos);
    }
}

TEST_CASE("symbol_for requires exactly four trits") {
    CHECK_THROWS_AS(SymbolTable::corrected().symbol_for(parse_trits("001")),
                    std::invalid_argument);
    CHECK_THROWS_AS(SymbolTable::corrected().symbol_for(parse_trits("00122")),
                    std::invalid_argument);
}

TEST_CASE("dump matches the checked-in table fixtures") {
    CHECK(SymbolTable::corrected().dump() == read_file(fixture("coding_table_corrected.tsv")));
    CHECK(SymbolTable::strict_paper().dump() == read_file(fixture("coding_table_strict.tsv")));
}

TEST_CASE("letter frequencies sum to 100 and are positive") {
    const FrequencyTable& freqs = FrequencyTable::english();
    double sum = 0.0;
    for (const auto& [letter, frequency] : freqs.letters) {
        CHECK(frequency > 0.0);
        sum += frequency;
    }
    CHECK(sum == doctest::Approx(100.0).epsilon(0.0001));  // +/- 0.01
    CHECK(freqs.letter('e') == 12.702);
    CHECK(freqs.letter('z') == 0.074);
    CHECK_THROWS_AS(freqs.letter('E'), std::out_of_range);

    for (const auto& [letter, frequency] : freqs.first_letters) {
        CHECK(frequency > 0.0);
    }
    CHECK(freqs.first_letters.front().first == 'T');
}
