#include <benchmark/benchmark.h>

#include "rnagell/antipell.hpp"

using namespace rnagell;

static void BM_AntiPellSearch(benchmark::State& state) {
    Int D, q;
    switch (state.range(0)) {
        case 0: D = 372; q = 743; break;
        case 1: D = 376; q = 751; break;
        default: D = 79; q = 631; break;
    }
    for (auto _ : state) {
        auto res = antipell_search(D, q, {1});
        benchmark::DoNotOptimize(res.searched.size());
    }
}
BENCHMARK(BM_AntiPellSearch)->Arg(0)->Arg(1)->Arg(2);

// the widest window among the built-in triples (about 10^7 candidates)
static void BM_AntiPellWide(benchmark::State& state) {
    for (auto _ : state) {
        auto res = antipell_search(652, 1303, {1});
        benchmark::DoNotOptimize(res.least.has_value());
    }
}
BENCHMARK(BM_AntiPellWide)->Unit(benchmark::kMillisecond)->Iterations(3);

static void BM_RingPower(benchmark::State& state) {
    RingElement base{372, 1427, 74};
    unsigned t = static_cast<unsigned>(state.range(0));
    for (auto _ : state) {
        auto r = ring_power(base, t);
        benchmark::DoNotOptimize(r.g.get_mpz_t());
    }
}
BENCHMARK(BM_RingPower)->Arg(5)->Arg(64)->Arg(512);

BENCHMARK_MAIN();
