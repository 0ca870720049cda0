#include <random>

#include <benchmark/benchmark.h>

#include "gramlab/factors.hpp"
#include "gramlab/families.hpp"

using namespace gramlab;

namespace {

std::vector<symbol_t> random_word(std::size_t n, std::uint32_t sigma) {
    std::mt19937_64 rng(42);
    std::uniform_int_distribution<std::uint32_t> d(0, sigma - 1);
    std::vector<symbol_t> w(n);
    for (auto& s : w) s = d(rng);
    return w;
}

void BM_factor_counts_serial(benchmark::State& st) {
    auto w = random_word(static_cast<std::size_t>(st.range(0)), 4);
    for (auto _ : st) benchmark::DoNotOptimize(kernels::serial::distinct_factor_counts(w, 8));
    st.SetItemsProcessed(st.iterations() * st.range(0));
}

void BM_factor_counts_parallel(benchmark::State& st) {
    auto w = random_word(static_cast<std::size_t>(st.range(0)), 4);
    for (auto _ : st) benchmark::DoNotOptimize(kernels::distinct_factor_counts(w, 8));
    st.SetItemsProcessed(st.iterations() * st.range(0));
}

void BM_repeated_factor_serial(benchmark::State& st) {
    auto w = families::incompressible_word(static_cast<std::size_t>(st.range(0))).word;
    for (auto _ : st) benchmark::DoNotOptimize(kernels::serial::has_repeated_factor(w.symbols, 2, 3));
}

void BM_repeated_factor_parallel(benchmark::State& st) {
    auto w = families::incompressible_word(static_cast<std::size_t>(st.range(0))).word;
    for (auto _ : st) benchmark::DoNotOptimize(kernels::has_repeated_factor(w.symbols, 2, 3));
}

void BM_sweep_serial(benchmark::State& st) {
    for (auto _ : st) benchmark::DoNotOptimize(kernels::serial::incompressible_sweep(2, static_cast<std::size_t>(st.range(0))));
    st.SetItemsProcessed(st.iterations() * (std::int64_t{1} << st.range(0)));
}

void BM_sweep_parallel(benchmark::State& st) {
    for (auto _ : st) benchmark::DoNotOptimize(kernels::incompressible_sweep(2, static_cast<std::size_t>(st.range(0))));
    st.SetItemsProcessed(st.iterations() * (std::int64_t{1} << st.range(0)));
}

} // namespace

BENCHMARK(BM_factor_counts_serial)->Arg(1 << 16)->Arg(1 << 20);
BENCHMARK(BM_factor_counts_parallel)->Arg(1 << 16)->Arg(1 << 20);
BENCHMARK(BM_repeated_factor_serial)->Arg(20)->Arg(60);
BENCHMARK(BM_repeated_factor_parallel)->Arg(20)->Arg(60);
BENCHMARK(BM_sweep_serial)->Arg(12)->Arg(14);
BENCHMARK(BM_sweep_parallel)->Arg(12)->Arg(14);

BENCHMARK_MAIN();
