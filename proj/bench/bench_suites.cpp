// Serial reference vs OpenMP fan-out for the heaviest check suites.
#include <benchmark/benchmark.h>

#include "krulldim/suites.hpp"

namespace {

void run(benchmark::State& state, const char* suite, krulldim::Exec exec) {
  const krulldim::Grid grid{static_cast<int>(state.range(0))};
  for (auto _ : state) {
    krulldim::CheckReport r = krulldim::run_suite(suite, grid, exec);
    benchmark::DoNotOptimize(r.checks);
    if (!r.passed()) state.SkipWithError("suite failed");
  }
}

void BM_GsctSerial(benchmark::State& s) { run(s, "gsct-identity", krulldim::Exec::kSerial); }
void BM_GsctParallel(benchmark::State& s) { run(s, "gsct-identity", krulldim::Exec::kParallel); }
void BM_TightnessSerial(benchmark::State& s) {
  run(s, "oracle-tightness", krulldim::Exec::kSerial);
}
void BM_TightnessParallel(benchmark::State& s) {
  run(s, "oracle-tightness", krulldim::Exec::kParallel);
}

}  // namespace

BENCHMARK(BM_GsctSerial)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_GsctParallel)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_TightnessSerial)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_TightnessParallel)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
