#include <benchmark/benchmark.h>

#include "ppu/rational.hpp"
#include "ppu/rng.hpp"

using Q = ppu::Rational;

namespace {

ppu::SpacePtr<Q> space(std::size_t n) {
    return ppu::QuadSpace<Q>::make(ppu::Mat<Q>::identity(n));
}

void BM_generator(benchmark::State& state) {
    const auto s = space(static_cast<std::size_t>(state.range(0)));
    ppu::SplitMix64 rng(1);
    const auto u = ppu::random_subspace(s, rng);
    for (auto _ : state) benchmark::DoNotOptimize(ppu::generator(u));
}
BENCHMARK(BM_generator)->Arg(2)->Arg(4)->Arg(8);

void BM_product(benchmark::State& state) {
    const auto s = space(4);
    ppu::SplitMix64 rng(2);
    const auto a = ppu::random_negative(s, static_cast<std::size_t>(state.range(0)), rng);
    const auto b = ppu::random_negative(s, static_cast<std::size_t>(state.range(0)), rng);
    for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_product)->Arg(2)->Arg(4)->Arg(8);

void BM_kernel(benchmark::State& state) {
    const auto s = space(3);
    ppu::SplitMix64 rng(3);
    const auto phi = ppu::random_negative(s, static_cast<std::size_t>(state.range(0)), rng);
    for (auto _ : state) benchmark::DoNotOptimize(ppu::kernel_submodule(phi));
}
BENCHMARK(BM_kernel)->Arg(2)->Arg(4)->Arg(6);

void BM_factorize(benchmark::State& state) {
    const auto s = space(3);
    ppu::SplitMix64 rng(4);
    const auto phi = ppu::random_negative(s, static_cast<std::size_t>(state.range(0)), rng);
    for (auto _ : state) benchmark::DoNotOptimize(ppu::factorize_pure(phi));
}
BENCHMARK(BM_factorize)->Arg(2)->Arg(4)->Arg(6);

void BM_meet(benchmark::State& state) {
    const auto s = space(3);
    ppu::SplitMix64 rng(5);
    const auto a = ppu::random_pure(s, static_cast<std::size_t>(state.range(0)), rng);
    const auto b = ppu::random_pure(s, static_cast<std::size_t>(state.range(0)), rng);
    for (auto _ : state) benchmark::DoNotOptimize(ppu::lattice_meet(a, b));
}
BENCHMARK(BM_meet)->Arg(2)->Arg(4);

} // namespace

BENCHMARK_MAIN();
