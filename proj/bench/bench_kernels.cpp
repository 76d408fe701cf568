// Serial reference kernels vs. their OpenMP versions.

#include <benchmark/benchmark.h>

#include <vector>

#include "bdt/kernels.hpp"
#include "bdt/sampling.hpp"

namespace {

using bdt::kernels::cplx;

std::vector<cplx> random_entries(std::size_t n) {
    auto rng = bdt::sampling::make_rng(7, n);
    std::vector<cplx> v(n * n);
    for (auto& x : v) x = bdt::sampling::box_complex(rng);
    return v;
}

void BM_MatmulSerial(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const auto a = random_entries(n), b = random_entries(n);
    std::vector<cplx> c(n * n);
    for (auto _ : state) {
        bdt::kernels::matmul_serial(a, b, c, n);
        benchmark::DoNotOptimize(c.data());
    }
}

void BM_MatmulParallel(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const auto a = random_entries(n), b = random_entries(n);
    std::vector<cplx> c(n * n);
    for (auto _ : state) {
        bdt::kernels::matmul_parallel(a, b, c, n);
        benchmark::DoNotOptimize(c.data());
    }
}

void BM_SpectralSerial(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const auto x = random_entries(n);
    std::vector<cplx> out(n * n);
    for (auto _ : state) {
        bdt::kernels::spectral_average_serial(x, out, n, 1, 2 * n - 1);
        benchmark::DoNotOptimize(out.data());
    }
}

void BM_SpectralParallel(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const auto x = random_entries(n);
    std::vector<cplx> out(n * n);
    for (auto _ : state) {
        bdt::kernels::spectral_average_parallel(x, out, n, 1, 2 * n - 1);
        benchmark::DoNotOptimize(out.data());
    }
}

} // namespace

BENCHMARK(BM_MatmulSerial)->Arg(64)->Arg(128)->Arg(256);
BENCHMARK(BM_MatmulParallel)->Arg(64)->Arg(128)->Arg(256);
BENCHMARK(BM_SpectralSerial)->Arg(32)->Arg(64)->Arg(128);
BENCHMARK(BM_SpectralParallel)->Arg(32)->Arg(64)->Arg(128);

BENCHMARK_MAIN();
