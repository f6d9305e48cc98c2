#include <benchmark/benchmark.h>

#include "rnagell/qform.hpp"

using namespace rnagell;

static void BM_ReducedForms(benchmark::State& state) {
    Int disc(4 * state.range(0));
    for (auto _ : state) {
        auto forms = reduced_forms(disc);
        benchmark::DoNotOptimize(forms.size());
    }
}
BENCHMARK(BM_ReducedForms)->Arg(79)->Arg(660)->Arg(9949);

static void BM_ClassNumber(benchmark::State& state) {
    Int D(state.range(0));
    for (auto _ : state) {
        auto c = class_number_4D(D);
        benchmark::DoNotOptimize(c.h_narrow);
    }
}
BENCHMARK(BM_ClassNumber)->Arg(79)->Arg(372)->Arg(660)->Arg(9949);

BENCHMARK_MAIN();
