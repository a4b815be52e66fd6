#include <benchmark/benchmark.h>

#include <random>
#include <string>

#include "b23/codec.hpp"
#include "b23/counting.hpp"
#include "b23/montecarlo.hpp"

namespace {

std::string sample_text(std::size_t size) {
    const std::string seed = "The quick brown fox jumps over the lazy dog. ";
    std::string text;
    text.reserve(size);
    while (text.size() < size) text += seed;
    text.resize(size);
    return text;
}

b23::TritString random_trits(std::size_t size) {
    std::mt19937_64 rng(123);
    std::uniform_int_distribution<int> digit(0, 2);
    b23::TritString trits;
    trits.reserve(size);
    for (std::size_t i = 0; i < size; ++i) trits.emplace_back(digit(rng));
    return trits;
}

void BM_Compress(benchmark::State& state) {
    const std::string text = sample_text(static_cast<std::size_t>(state.range(0)));
    const b23::SymbolTable& table = b23::SymbolTable::corrected();
    for (auto _ : state) {
        benchmark::DoNotOptimize(b23::compress(text, table));
    }
    state.SetBytesProcessed(static_cast<std::int64_t>(state.iterations()) *
                            state.range(0));
}
BENCHMARK(BM_Compress)->Arg(1 << 10)->Arg(1 << 16);

void BM_Decompress(benchmark::State& state) {
    const std::string text = sample_text(static_cast<std::size_t>(state.range(0)));
    const b23::Container container = b23::compress(text, b23::SymbolTable::corrected());
    for (auto _ : state) {
        benchmark::DoNotOptimize(b23::decompress(container));
    }
    state.SetBytesProcessed(static_cast<std::int64_t>(state.iterations()) *
                            state.range(0));
}
BENCHMARK(BM_Decompress)->Arg(1 << 10)->Arg(1 << 16);

void BM_EncodeB23(benchmark::State& state) {
    const b23::TritString trits = random_trits(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(b23::encode_b23(trits));
    }
    state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations()) *
                            state.range(0));
}
BENCHMARK(BM_EncodeB23)->Arg(1 << 12)->Arg(1 << 16);

void BM_DecodeB23(benchmark::State& state) {
    const b23::Bitstream bits =
        b23::encode_b23(random_trits(static_cast<std::size_t>(state.range(0))));
    for (auto _ : state) {
        benchmark::DoNotOptimize(b23::decode_b23(bits));
    }
    state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations()) *
                            state.range(0));
}
BENCHMARK(BM_DecodeB23)->Arg(1 << 12)->Arg(1 << 16);

void BM_Recurrence(benchmark::State& state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(b23::count_no12_recurrence(static_cast<int>(state.range(0))));
    }
}
BENCHMARK(BM_Recurrence)->Arg(100)->Arg(1000);

void BM_MonteCarlo(benchmark::State& state) {
    b23::TritDistribution uniform = b23::TritDistribution::iid(1.0 / 3, 1.0 / 3, 1.0 / 3);
    for (auto _ : state) {
        benchmark::DoNotOptimize(b23::pair_frequency_monte_carlo(
            uniform, static_cast<int>(state.range(0)), 10000, 42, 1));
    }
}
BENCHMARK(BM_MonteCarlo)->Arg(10)->Arg(100);

}  // namespace

BENCHMARK_MAIN();
