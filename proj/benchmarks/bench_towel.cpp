#include <benchmark/benchmark.h>

#include <memory>

#include "towel/covering.hpp"
#include "towel/hyperbolicity.hpp"

namespace {

using namespace towel;

void BM_IntervalMul(benchmark::State& state)
{
    Interval x(-0.3, 1.7);
    const Interval y(0.9, 1.1);
    for (auto _ : state) {
        benchmark::DoNotOptimize(x * y);
        benchmark::ClobberMemory();
    }
}
BENCHMARK(BM_IntervalMul);

void BM_IntervalAddChain(benchmark::State& state)
{
    const Interval step(0.1, 0.1000001);
    for (auto _ : state) {
        Interval acc(0.0);
        for (int i = 0; i < 64; ++i) {
            acc = acc + step;
        }
        benchmark::DoNotOptimize(acc);
    }
}
BENCHMARK(BM_IntervalAddChain);

void BM_HenonFourthIterate(benchmark::State& state)
{
    const auto form = static_cast<EnclosureForm>(state.range(0));
    const auto sets = make_horseshoe_hsets();
    const IteratedMap f = local_map(IteratedMap(std::make_shared<HenonMap>(), 4), sets.a, sets.a);
    const Box x{Interval(0.1, 0.2), Interval(-0.5, -0.4), Interval(0.3, 0.4)};
    for (auto _ : state) {
        benchmark::DoNotOptimize(f.enclose(x, form));
    }
}
BENCHMARK(BM_HenonFourthIterate)->Arg(static_cast<int>(EnclosureForm::Naive))->Arg(static_cast<int>(EnclosureForm::MeanValue));

void BM_ConditionI(benchmark::State& state)
{
    const auto sets = make_horseshoe_hsets();
    const IteratedMap f(std::make_shared<HenonMap>(), 4);
    CoveringConfig cfg;
    const auto k = static_cast<std::size_t>(state.range(0));
    cfg.body_grid = {k, k, k};
    cfg.workers = 1;
    for (auto _ : state) {
        benchmark::DoNotOptimize(check_condition_I(f, sets.a, sets.b, cfg));
    }
    state.SetItemsProcessed(static_cast<int64_t>(state.iterations() * k * k * k));
}
BENCHMARK(BM_ConditionI)->Arg(10)->Arg(20)->Unit(benchmark::kMillisecond);

void BM_ConeBox(benchmark::State& state)
{
    const auto sets = make_horseshoe_hsets();
    const auto maps = horseshoe_map_pairs(IteratedMap(std::make_shared<HenonMap>(), 4), sets.a, sets.b);
    const ConeQuadraticForm q(2, 1);
    const Box local{Interval(-0.04, 0.04), Interval(-0.04, 0.04), Interval(-0.04, 0.04)};
    for (auto _ : state) {
        benchmark::DoNotOptimize(classify_cone_box(maps[0].map, local, q, EnclosureForm::MeanValue));
    }
}
BENCHMARK(BM_ConeBox);

} // namespace
BENCHMARK_MAIN();
