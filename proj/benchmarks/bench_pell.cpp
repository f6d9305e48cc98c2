#include <benchmark/benchmark.h>

#include "rnagell/pell.hpp"

using namespace rnagell;

static void BM_PellLeast(benchmark::State& state) {
    Int D(state.range(0));
    for (auto _ : state) {
        auto f = pell_least(D);
        benchmark::DoNotOptimize(f.u1.get_mpz_t());
    }
}
BENCHMARK(BM_PellLeast)->Arg(79)->Arg(376)->Arg(652)->Arg(661)->Arg(9949);

static void BM_PellNth(benchmark::State& state) {
    auto f = pell_least(376);
    unsigned n = static_cast<unsigned>(state.range(0));
    for (auto _ : state) {
        auto s = pell_nth(f, n);
        benchmark::DoNotOptimize(s.u.get_mpz_t());
    }
}
BENCHMARK(BM_PellNth)->Arg(8)->Arg(64)->Arg(512);

BENCHMARK_MAIN();
