#include <benchmark/benchmark.h>

#include "ginv/generate.hpp"
#include "ginv/matrix.hpp"

namespace {

ginv::Matrix<ginv::GaussianRational> random_exact(int n, uint64_t seed) {
    ginv::SplitMix64 rng(seed);
    auto pool = ginv::default_entry_pool();
    ginv::Matrix<ginv::GaussianRational> m(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m(i, j) = pool[rng.below(pool.size())];
    return m;
}

void bm_matmul_exact(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    auto a = random_exact(n, 7);
    auto b = random_exact(n, 11);
    for (auto _ : state) benchmark::DoNotOptimize(a * b);
}

void bm_matmul_float(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    auto a = ginv::to_float(random_exact(n, 7));
    auto b = ginv::to_float(random_exact(n, 11));
    for (auto _ : state) benchmark::DoNotOptimize(a * b);
}

}  // namespace

BENCHMARK(bm_matmul_exact)->Arg(2)->Arg(4)->Arg(8)->Arg(16);
BENCHMARK(bm_matmul_float)->Arg(2)->Arg(4)->Arg(8)->Arg(16);
