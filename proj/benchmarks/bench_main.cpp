#include <benchmark/benchmark.h>

#include "skein/laurent.hpp"

static void BM_QintProduct(benchmark::State& state) {
    using namespace skein;
    for (auto _ : state) {
        LaurentPoly p = qint(static_cast<int>(state.range(0)));
        benchmark::DoNotOptimize(p * p);
    }
}
BENCHMARK(BM_QintProduct)->Arg(8)->Arg(16);

BENCHMARK_MAIN();
