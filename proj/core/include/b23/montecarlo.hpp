#pragma once

#include <array>
#include <cstdint>
#include <string_view>

#include "b23/symbol_table.hpp"
#include "b23/trit.hpp"

namespace b23 {

/// Small counter-style generator (splitmix64). Used for Monte Carlo trials:
/// trial t of a run seeded with s draws from a SplitMix64 seeded with
/// mix64(s + GOLDEN * (t + 1)), so every trial has its own substream and
/// results do not depend on how trials are scheduled across workers.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}

    std::uint64_t next() noexcept {
        state_ += 0x9e3779b97f4a7c15ULL;
        std::uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform double in [0, 1).
    double next_unit() noexcept { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    static std::uint64_t substream_seed(std::uint64_t seed, std::uint64_t trial) noexcept;

private:
    std::uint64_t state_;
};

/// A distribution over trit strings: an initial trit distribution plus a
/// per-trit transition matrix. iid distributions use identical rows.
class TritDistribution {
public:
    /// Independent trits with fixed probabilities. p0+p1+p2 must be 1
    /// within 1e-12, all nonnegative; otherwise throws std::invalid_argument.
    static TritDistribution iid(double p0, double p1, double p2);

    /// First-order Markov chain; every row and the initial vector must sum
    /// to 1 within 1e-12, entries nonnegative.
    static TritDistribution markov(const std::array<std::array<double, 3>, 3>& transition,
                                   const std::array<double, 3>& initial);

    /// Markov chain estimated from the trit stream of `text` encoded with
    /// `table`: initial = marginal trit frequencies, transition rows from
    /// bigram counts (rows with no observations fall back to the marginal).
    static TritDistribution empirical(std::string_view text, const SymbolTable& table);

    const std::array<double, 3>& initial() const noexcept { return initial_; }
    const std::array<std::array<double, 3>, 3>& transition() const noexcept {
        return transition_;
    }

    Trit sample_initial(SplitMix64& rng) const noexcept;
    Trit sample_next(SplitMix64& rng, Trit previous) const noexcept;

private:
    TritDistribution(const std::array<std::array<double, 3>, 3>& transition,
                     const std::array<double, 3>& initial);

    std::array<std::array<double, 3>, 3> transition_;
    std::array<double, 3> initial_;
};

struct McSummary {
    int n = 0;
    std::uint64_t trials = 0;
    std::uint64_t seed = 0;
    double mean_pairs = 0.0;       // greedy fused-pair count per string
    double variance_pairs = 0.0;   // sample variance of that count
    double std_error = 0.0;        // standard error of mean_pairs
    double mean_bits_saved = 0.0;  // 2 * mean_pairs
    /// Mean count of adjacent (1,2) occurrences. Reported alongside the
    /// greedy count; the two coincide on trit strings because (1,2)
    /// occurrences cannot overlap and the greedy scan fuses each one.
    double mean_adjacent_pairs = 0.0;
};

/// Samples `trials` strings of length n and reports fused-pair statistics.
/// Deterministic for a given (dist, n, trials, seed) regardless of
/// `workers` (0 = one per hardware thread): per-trial substreams come from
/// the seed contract above and the accumulators are exact integers.
McSummary pair_frequency_monte_carlo(const TritDistribution& dist, int n,
                                     std::uint64_t trials, std::uint64_t seed,
                                     unsigned workers = 0);

}  // namespace b23
