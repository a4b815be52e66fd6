// Test-only reference implementations, kept independent of the library
// code paths they are used to check.
#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <string>

#include "b23/montecarlo.hpp"
#include "b23/symbol_table.hpp"
#include "b23/trit.hpp"

namespace b23::testing {

/// Adjacent (1,2) occurrences counted by a plain position scan. Occurrences
/// cannot overlap, so this equals the greedy fused-pair count.
inline std::size_t naive_pair_count(const TritString& trits) {
    std::size_t count = 0;
    for (std::size_t i = 0; i + 1 < trits.size(); ++i) {
        if (trits[i].value() == 1 && trits[i + 1].value() == 2) ++count;
    }
    return count;
}

/// Exact expected pair count by dynamic programming on the distribution of
/// the previous trit: a pair completes exactly when a 1 is followed by a 2.
inline double expected_pairs_dp(const TritDistribution& dist, int n) {
    std::array<double, 3> prev = dist.initial();
    double expected = 0.0;
    for (int step = 1; step < n; ++step) {
        expected += prev[1] * dist.transition()[1][2];
        std::array<double, 3> next{};
        for (std::size_t from = 0; from < 3; ++from) {
            for (std::size_t to = 0; to < 3; ++to) {
                next[to] += prev[from] * dist.transition()[from][to];
            }
        }
        prev = next;
    }
    return expected;
}

/// Exact expected pair count by enumerating all 3^n strings. Only sensible
/// for small n.
inline double expected_pairs_enumeration(const TritDistribution& dist, int n) {
    std::size_t total = 1;
    for (int i = 0; i < n; ++i) total *= 3;
    double expected = 0.0;
    for (std::size_t index = 0; index < total; ++index) {
        std::size_t v = index;
        TritString trits;
        trits.reserve(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) {
            trits.emplace_back(static_cast<int>(v % 3));
            v /= 3;
        }
        double probability = dist.initial()[static_cast<std::size_t>(trits[0].value())];
        for (int i = 1; i < n; ++i) {
            probability *= dist.transition()[static_cast<std::size_t>(trits[i - 1].value())]
                                            [static_cast<std::size_t>(trits[i].value())];
        }
        expected += probability * static_cast<double>(naive_pair_count(trits));
    }
    return expected;
}

inline TritString random_trits(std::mt19937_64& rng, std::size_t length) {
    std::uniform_int_distribution<int> digit(0, 2);
    TritString trits;
    trits.reserve(length);
    for (std::size_t i = 0; i < length; ++i) trits.emplace_back(digit(rng));
    return trits;
}

inline std::string random_text(std::mt19937_64& rng, const SymbolTable& table,
                               std::size_t length) {
    std::uniform_int_distribution<std::size_t> row(0, SymbolTable::size - 1);
    std::string text;
    text.reserve(length);
    for (std::size_t i = 0; i < length; ++i) text += table.entries()[row(rng)].symbol;
    return text;
}

}  // namespace b23::testing
