#include <benchmark/benchmark.h>

#include "bott/classify.hpp"

namespace {

void BM_Classify2Hirzebruch(benchmark::State& state) {
    const auto t = bott::hirzebruch_tower(1);
    const auto t2 = bott::hirzebruch_tower(static_cast<std::int64_t>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(bott::classify_2stage(t, t2));
}
BENCHMARK(BM_Classify2Hirzebruch)->Arg(3)->Arg(2);

void BM_IsoSearchTwist(benchmark::State& state) {
    const auto bound = static_cast<unsigned>(state.range(0));
    const auto target = bott::BottRing::build(bott::bott3_tower(1, 2, 3));
    const auto source = bott::BottRing::build(bott::bott3_tower(1, -2, -3));
    for (auto _ : state)
        benchmark::DoNotOptimize(bott::iso_search(source, target, bound, {1}));
}
BENCHMARK(BM_IsoSearchTwist)->Arg(3)->Arg(6)->Unit(benchmark::kMillisecond);

void BM_Classify3(benchmark::State& state) {
    const auto t = bott::bott3_tower(2, 1, 3);
    const auto t2 = bott::bott3_tower(-2, 1 - 2 * 3, 3);
    for (auto _ : state)
        benchmark::DoNotOptimize(bott::classify_3stage(t, t2, 6, {1}));
}
BENCHMARK(BM_Classify3)->Unit(benchmark::kMillisecond);

void BM_IsProduct(benchmark::State& state) {
    const auto t = bott::bott3_tower(2, 2, 0);
    for (auto _ : state)
        benchmark::DoNotOptimize(bott::is_product_cohomology(t));
}
BENCHMARK(BM_IsProduct);

} // namespace
