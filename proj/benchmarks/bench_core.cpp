#include "tilepot/assembly.hpp"
#include "tilepot/constructions.hpp"
#include "tilepot/min_search.hpp"
#include "tilepot/scenario.hpp"

#include <benchmark/benchmark.h>

namespace {

using namespace tilepot;

void BM_CanonicalEdges(benchmark::State& state) {
    const Multigraph g = make_lollipop(static_cast<int>(state.range(0)), 3);
    for (auto _ : state) benchmark::DoNotOptimize(g.canonical_edges());
}
BENCHMARK(BM_CanonicalEdges)->Arg(5)->Arg(7)->Arg(9);

void BM_Realizes(benchmark::State& state) {
    const int m = static_cast<int>(state.range(0));
    const Pot pot = tadpole_pot(2, m, 2);
    const Multigraph target = make_tadpole(m, 2);
    for (auto _ : state) {
        Budget budget;
        benchmark::DoNotOptimize(realizes(pot, target, &budget));
    }
}
BENCHMARK(BM_Realizes)->Arg(4)->Arg(6)->Arg(8);

void BM_CheckScenario2(benchmark::State& state) {
    const int m = static_cast<int>(state.range(0));
    const Pot pot = tadpole_pot(2, m, 2);
    const Multigraph target = make_tadpole(m, 2);
    for (auto _ : state)
        benchmark::DoNotOptimize(check_scenario(pot, target, 2));
}
BENCHMARK(BM_CheckScenario2)->Arg(4)->Arg(5)->Arg(6);

void BM_MinBondTypes(benchmark::State& state) {
    const Multigraph target = make_cycle(static_cast<int>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(min_bond_types(target, 2, 4));
}
BENCHMARK(BM_MinBondTypes)->Arg(4)->Arg(5)->Arg(6);

} // namespace

BENCHMARK_MAIN();
