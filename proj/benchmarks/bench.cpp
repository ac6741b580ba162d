#include <benchmark/benchmark.h>

#include "ydc/difficulty.hpp"
#include "ydc/displacement.hpp"

using namespace ydc;

static void BM_Displace(benchmark::State& state) {
    Partition p = Partition::parse("8,7,1,1,1");
    Progression lam = Progression::residue(2, 3);
    for (auto _ : state)
        benchmark::DoNotOptimize(displace(p, lam, Direction::Up));
}
BENCHMARK(BM_Displace);

static void BM_LinkedSuccessors(benchmark::State& state) {
    Partition q = Partition::parse("5,4,2,1");
    Partition container = Partition::parse("8,8,8,8,8,8");
    for (auto _ : state)
        benchmark::DoNotOptimize(linked_successors(q, container));
}
BENCHMARK(BM_LinkedSuccessors);

static void BM_DifficultyBox(benchmark::State& state) {
    int a = static_cast<int>(state.range(0));
    int b = static_cast<int>(state.range(1));
    Partition box = Partition::from_sorted(std::vector<int>(b, a));
    DifficultyEngine engine;
    for (auto _ : state)
        benchmark::DoNotOptimize(engine.difficulty(box).delta);
    state.SetLabel(box.str());
}
BENCHMARK(BM_DifficultyBox)->Args({4, 4})->Args({6, 5})->Args({7, 7});

BENCHMARK_MAIN();
