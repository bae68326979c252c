#include <benchmark/benchmark.h>

#include "ginv/drazin.hpp"
#include "ginv/generate.hpp"

namespace {

// Singular but nonzero test input: a shift block plus an invertible block.
template <typename T>
ginv::Matrix<T> mixed_core_nilpotent(int n) {
    ginv::Matrix<T> m(n, n);
    int half = n / 2;
    for (int i = 0; i + 1 < half; ++i) m(i, i + 1) = ginv::ScalarOps<T>::one();
    for (int i = half; i < n; ++i) m(i, i) = ginv::ScalarOps<T>::from_complex({2.0, 0.0});
    return m;
}

void bm_drazin_exact(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    auto a = mixed_core_nilpotent<ginv::GaussianRational>(n);
    for (auto _ : state) benchmark::DoNotOptimize(ginv::drazin(a));
}

void bm_drazin_float(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    auto a = mixed_core_nilpotent<ginv::Complex>(n);
    for (auto _ : state) benchmark::DoNotOptimize(ginv::drazin(a));
}

void bm_transfer_exact(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    ginv::GenSpec spec;
    spec.family = ginv::ConditionFamily::MillerZguitti;
    spec.dim = n;
    spec.seed = 5;
    auto q = ginv::generate(spec);
    for (auto _ : state) benchmark::DoNotOptimize(ginv::transfer_gdrazin(q));
}

}  // namespace

BENCHMARK(bm_drazin_exact)->Arg(4)->Arg(8)->Arg(16);
BENCHMARK(bm_drazin_float)->Arg(4)->Arg(8)->Arg(16);
BENCHMARK(bm_transfer_exact)->Arg(3)->Arg(4)->Arg(5);
