#include <benchmark/benchmark.h>

#include "bott/char_classes.hpp"
#include "bott/ring.hpp"

namespace {

bott::TowerSpec tower_with_dims(std::size_t m, std::size_t n) {
    bott::RawTower raw;
    for (std::size_t i = 0; i < m; ++i) {
        bott::IntegerMatrix rows(n, bott::IntegerVector(i));
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t j = 0; j < i; ++j)
                rows[r][j] = static_cast<std::int64_t>((r + 2 * j + i) % 5) - 2;
        raw.stages.push_back({bott::Integer(n), rows});
    }
    return bott::validate_tower(raw);
}

void BM_BuildRing(benchmark::State& state) {
    const auto tower = tower_with_dims(static_cast<std::size_t>(state.range(0)), static_cast<std::size_t>(state.range(1)));
    for (auto _ : state)
        benchmark::DoNotOptimize(bott::BottRing::build(tower));
}
BENCHMARK(BM_BuildRing)->Args({3, 1})->Args({4, 2})->Args({4, 3});

void BM_SquareOfGeneric(benchmark::State& state) {
    const auto tower = tower_with_dims(static_cast<std::size_t>(state.range(0)), static_cast<std::size_t>(state.range(1)));
    const auto ring = bott::BottRing::build(tower);
    auto u = ring.one();
    for (std::size_t i = 1; i <= ring.height(); ++i)
        u += ring.generator(i) + ring.power(ring.generator(i), 2);
    u * u; // builds the action tables outside the timed loop
    for (auto _ : state)
        benchmark::DoNotOptimize(u * u);
}
BENCHMARK(BM_SquareOfGeneric)->Args({3, 1})->Args({4, 2})->Args({4, 3});

void BM_TangentPontrjagin(benchmark::State& state) {
    const auto tower = tower_with_dims(static_cast<std::size_t>(state.range(0)), static_cast<std::size_t>(state.range(1)));
    for (auto _ : state)
        benchmark::DoNotOptimize(bott::tangent_pontrjagin(tower));
}
BENCHMARK(BM_TangentPontrjagin)->Args({3, 1})->Args({4, 2});

void BM_StiefelWhitney(benchmark::State& state) {
    const auto tower = tower_with_dims(static_cast<std::size_t>(state.range(0)), static_cast<std::size_t>(state.range(1)));
    for (auto _ : state)
        benchmark::DoNotOptimize(bott::stiefel_whitney(tower));
}
BENCHMARK(BM_StiefelWhitney)->Args({3, 1})->Args({4, 1})->Args({2, 2});

} // namespace
