#include <benchmark/benchmark.h>

#include "ginv/eigen.hpp"
#include "ginv/generate.hpp"

namespace {

void bm_eigenvalues(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    ginv::SplitMix64 rng(13);
    auto pool = ginv::default_entry_pool();
    ginv::Matrix<ginv::GaussianRational> m(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m(i, j) = pool[rng.below(pool.size())];
    for (auto _ : state) benchmark::DoNotOptimize(ginv::eigenvalues(m));
}

void bm_charpoly(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    ginv::SplitMix64 rng(13);
    auto pool = ginv::default_entry_pool();
    ginv::Matrix<ginv::GaussianRational> m(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m(i, j) = pool[rng.below(pool.size())];
    for (auto _ : state) benchmark::DoNotOptimize(ginv::charpoly(m));
}

}  // namespace

BENCHMARK(bm_eigenvalues)->Arg(2)->Arg(4)->Arg(6)->Arg(8);
BENCHMARK(bm_charpoly)->Arg(2)->Arg(4)->Arg(6)->Arg(8);
