#include <benchmark/benchmark.h>

#include "rnagell/mordell.hpp"
#include "rnagell/pipeline.hpp"

using namespace rnagell;

static void BM_BoundedSearch(benchmark::State& state) {
    auto curve = build_curve(3, 0, 664);
    Int maxNum(state.range(0));
    for (auto _ : state) {
        auto pts = bounded_s_point_search(curve, 2, maxNum);
        benchmark::DoNotOptimize(pts.size());
    }
}
BENCHMARK(BM_BoundedSearch)->Arg(100'000)->Arg(1'000'000)->Arg(10'000'000)
    ->Unit(benchmark::kMillisecond);

static void BM_BruteForceWindow(benchmark::State& state) {
    Int k(state.range(0));
    for (auto _ : state) {
        auto sols = brute_force(k, SearchWindow{11, 11});
        benchmark::DoNotOptimize(sols.size());
    }
}
BENCHMARK(BM_BruteForceWindow)->Arg(40)->Arg(372)->Arg(720);

static void BM_AuditOneK(benchmark::State& state) {
    AuditParams params;
    params.window = SearchWindow{11, 11};
    params.search_max_denom_exp = 2;
    params.search_max_numerator = 1'000'000;
    for (auto _ : state) {
        auto r = audit_k(Int(state.range(0)), params);
        benchmark::DoNotOptimize(r.triples.size());
    }
}
BENCHMARK(BM_AuditOneK)->Arg(192)->Arg(372)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
