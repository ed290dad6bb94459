// Throughput of the hot paths: digit arithmetic at several widths, long
// division, reciprocal expansion, and the tablet-facing routines. Inputs
// are seeded so runs compare across commits.

#include <benchmark/benchmark.h>

#include <cstdint>
#include <random>
#include <vector>

#include "sexag/sexag.hpp"

namespace {

using sexag::SexValue;

std::vector<SexValue> seeded_integers(std::size_t count, int digits,
                                      std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> any_digit(0, 59);
    std::uniform_int_distribution<int> lead_digit(1, 59);
    std::vector<SexValue> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        std::vector<std::uint8_t> lsd_first;
        lsd_first.reserve(static_cast<std::size_t>(digits));
        for (int d = 0; d + 1 < digits; ++d) {
            lsd_first.push_back(static_cast<std::uint8_t>(any_digit(rng)));
        }
        lsd_first.push_back(static_cast<std::uint8_t>(lead_digit(rng)));
        out.push_back(SexValue::from_parts(sexag::Sign::positive,
                                           std::move(lsd_first), 0));
    }
    return out;
}

void BM_Multiply(benchmark::State& state) {
    const int digits = static_cast<int>(state.range(0));
    const auto values = seeded_integers(64, digits, 0xbe9c0001);
    std::size_t i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(values[i & 63] * values[(i + 1) & 63]);
        ++i;
    }
}
BENCHMARK(BM_Multiply)->Arg(4)->Arg(16)->Arg(64)->Arg(256);

void BM_DivMod(benchmark::State& state) {
    const int digits = static_cast<int>(state.range(0));
    const auto dividends = seeded_integers(32, 2 * digits, 0xbe9c0002);
    const auto divisors = seeded_integers(32, digits, 0xbe9c0003);
    std::size_t i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(
            sexag::divmod(dividends[i & 31], divisors[(i + 1) & 31]));
        ++i;
    }
}
BENCHMARK(BM_DivMod)->Arg(4)->Arg(16)->Arg(64);

void BM_Reciprocal(benchmark::State& state) {
    const auto n = static_cast<std::uint64_t>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(sexag::reciprocal(n));
    }
}
BENCHMARK(BM_Reciprocal)->Arg(18)->Arg(4096)->Arg(1048576);

void BM_ReciprocalTable(benchmark::State& state) {
    const auto limit = static_cast<std::uint64_t>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(sexag::reciprocal_table(limit));
    }
}
BENCHMARK(BM_ReciprocalTable)->Arg(1000)->Arg(10000);

void BM_ParseFormat(benchmark::State& state) {
    const auto values = seeded_integers(64, 16, 0xbe9c0004);
    std::size_t i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(SexValue::parse(values[i & 63].str()));
        ++i;
    }
}
BENCHMARK(BM_ParseFormat);

void BM_SquareArea(benchmark::State& state) {
    const SexValue side = SexValue::parse("50,0");
    for (auto _ : state) {
        benchmark::DoNotOptimize(sexag::square_area_scribal(side));
    }
}
BENCHMARK(BM_SquareArea);

void BM_Decompose(benchmark::State& state) {
    const SexValue stock = SexValue::from_int(9'876'543);
    for (auto _ : state) {
        benchmark::DoNotOptimize(
            sexag::decompose_mixed(stock, sexag::UnitSystemId::capacity_granary,
                                   sexag::QuantityForm::subtractive_if_shorter));
    }
}
BENCHMARK(BM_Decompose);

void BM_WordsRoundtrip(benchmark::State& state) {
    std::uint32_t n = 1;
    for (auto _ : state) {
        benchmark::DoNotOptimize(sexag::words_to_int(sexag::int_to_words(n).str()));
        n = n % 12'959'999 + 1;
    }
}
BENCHMARK(BM_WordsRoundtrip);

}  // namespace

BENCHMARK_MAIN();
