#include "b23/montecarlo.hpp"

#include <cmath>
#include <future>
#include <stdexcept>
#include <thread>
#include <vector>

#include "b23/encoding.hpp"

namespace b23 {
namespace {

constexpr double kRowTolerance = 1e-12;

void validate_row(const std::array<double, 3>& row) {
    double sum = 0.0;
    for (double p : row) {
        if (!(p >= 0.0)) throw std::invalid_argument("invalid distribution: negative probability");
        sum += p;
    }
    if (std::abs(sum - 1.0) > kRowTolerance) {
        throw std::invalid_argument("invalid distribution: probabilities must sum to 1");
    }
}

Trit sample(const std::array<double, 3>& row, SplitMix64& rng) noexcept {
    double u = rng.next_unit();
    if (u < row[0]) return Trit(0);
    if (u < row[0] + row[1]) return Trit(1);
    return Trit(2);
}

struct TrialSums {
    std::uint64_t pairs = 0;
    std::uint64_t pairs_squared = 0;
    std::uint64_t adjacent = 0;

    TrialSums& operator+=(const TrialSums& other) noexcept {
        pairs += other.pairs;
        pairs_squared += other.pairs_squared;
        adjacent += other.adjacent;
        return *this;
    }
};

TrialSums run_trials(const TritDistribution& dist, int n, std::uint64_t seed,
                     std::uint64_t first, std::uint64_t last) {
    TrialSums sums;
    for (std::uint64_t trial = first; trial < last; ++trial) {
        SplitMix64 rng(SplitMix64::substream_seed(seed, trial));
        std::uint64_t pairs = 0;
        std::uint64_t adjacent = 0;
        Trit previous = dist.sample_initial(rng);
        bool fusible = previous.value() == 1;
        for (int i = 1; i < n; ++i) {
            Trit current = dist.sample_next(rng, previous);
            if (previous.value() == 1 && current.value() == 2) ++adjacent;
            if (fusible && current.value() == 2) {
                ++pairs;
                fusible = false;
            } else {
                fusible = current.value() == 1;
            }
            previous = current;
        }
        sums.pairs += pairs;
        sums.pairs_squared += pairs * pairs;
        sums.adjacent += adjacent;
    }
    return sums;
}

}  // namespace

std::uint64_t SplitMix64::substream_seed(std::uint64_t seed, std::uint64_t trial) noexcept {
    SplitMix64 mixer(seed + 0x9e3779b97f4a7c15ULL * (trial + 1));
    return mixer.next();
}

TritDistribution::TritDistribution(const std::array<std::array<double, 3>, 3>& transition,
                                   const std::array<double, 3>& initial)
    : transition_(transition), initial_(initial) {
    validate_row(initial_);
    for (const auto& row : transition_) validate_row(row);
}

TritDistribution TritDistribution::iid(double p0, double p1, double p2) {
    std::array<double, 3> row = {p0, p1, p2};
    return TritDistribution({row, row, row}, row);
}

TritDistribution TritDistribution::markov(
    const std::array<std::array<double, 3>, 3>& transition,
    const std::array<double, 3>& initial) {
    return TritDistribution(transition, initial);
}

TritDistribution TritDistribution::empirical(std::string_view text, const SymbolTable& table) {
    TritString trits;
    trits.reserve(SymbolTable::code_width * text.size());
    for (std::size_t i = 0; i < text.size(); ++i) {
        const auto& entry = table.entry_for(text[i], i);
        trits.insert(trits.end(), entry.code.begin(), entry.code.end());
    }
    if (trits.empty()) {
        throw std::invalid_argument("invalid distribution: empty text");
    }

    std::array<double, 3> marginal{};
    for (Trit t : trits) marginal[static_cast<std::size_t>(t.value())] += 1.0;
    for (double& p : marginal) p /= static_cast<double>(trits.size());

    std::array<std::array<double, 3>, 3> counts{};
    for (std::size_t i = 0; i + 1 < trits.size(); ++i) {
        counts[static_cast<std::size_t>(trits[i].value())]
              [static_cast<std::size_t>(trits[i + 1].value())] += 1.0;
    }
    std::array<std::array<double, 3>, 3> transition{};
    for (std::size_t from = 0; from < 3; ++from) {
        double total = counts[from][0] + counts[from][1] + counts[from][2];
        if (total > 0.0) {
            for (std::size_t to = 0; to < 3; ++to) transition[from][to] = counts[from][to] / total;
        } else {
            transition[from] = marginal;  // unseen predecessor
        }
    }
    return TritDistribution(transition, marginal);
}

Trit TritDistribution::sample_initial(SplitMix64& rng) const noexcept {
    return sample(initial_, rng);
}

Trit TritDistribution::sample_next(SplitMix64& rng, Trit previous) const noexcept {
    return sample(transition_[static_cast<std::size_t>(previous.value())], rng);
}

McSummary pair_frequency_monte_carlo(const TritDistribution& dist, int n,
                                     std::uint64_t trials, std::uint64_t seed,
                                     unsigned workers) {
    if (n < 1) throw std::invalid_argument("n must be >= 1");
    if (trials < 1) throw std::invalid_argument("trials must be >= 1");
    if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
    workers = static_cast<unsigned>(std::min<std::uint64_t>(workers, trials));

    TrialSums total;
    if (workers <= 1) {
        total = run_trials(dist, n, seed, 0, trials);
    } else {
        std::vector<std::future<TrialSums>> futures;
        futures.reserve(workers);
        std::uint64_t chunk = trials / workers;
        std::uint64_t remainder = trials % workers;
        std::uint64_t first = 0;
        for (unsigned w = 0; w < workers; ++w) {
            std::uint64_t last = first + chunk + (w < remainder ? 1 : 0);
            futures.push_back(std::async(std::launch::async, run_trials, std::cref(dist),
                                         n, seed, first, last));
            first = last;
        }
        for (auto& future : futures) total += future.get();
    }

    McSummary summary;
    summary.n = n;
    summary.trials = trials;
    summary.seed = seed;
    double t = static_cast<double>(trials);
    summary.mean_pairs = static_cast<double>(total.pairs) / t;
    summary.mean_adjacent_pairs = static_cast<double>(total.adjacent) / t;
    summary.mean_bits_saved = 2.0 * summary.mean_pairs;
    if (trials > 1) {
        double centered = static_cast<double>(total.pairs_squared) -
                          t * summary.mean_pairs * summary.mean_pairs;
        summary.variance_pairs = std::max(0.0, centered / (t - 1.0));
        summary.std_error = std::sqrt(summary.variance_pairs / t);
    }
    return summary;
}

}  // namespace b23
