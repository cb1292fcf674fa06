// Serial reference against the OpenMP path for each exhaustive kernel.
// Arg 0 is serial, arg 1 is parallel.

#include <benchmark/benchmark.h>

#include "picard/cohomology.hpp"
#include "picard/families.hpp"
#include "picard/kernels.hpp"

using namespace picard;

namespace {

ExecutionPolicy policy(const benchmark::State& state) {
    return state.range(0) == 0 ? ExecutionPolicy::Serial : ExecutionPolicy::Parallel;
}

void BM_ScanStabilizerF13(benchmark::State& state) {
    const auto& f = FiniteField::get(13);
    const WeierstrassCurve<FieldElement> c{FieldElement(f, 0), FieldElement(f, 0), FieldElement(f, 0),
                                           FieldElement(f, 1), FieldElement(f, 0)};
    for (auto _ : state) benchmark::DoNotOptimize(scan_stabilizer(c, policy(state)));
}
BENCHMARK(BM_ScanStabilizerF13)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_Gl2PairCheck(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(gl2f3_action_check(policy(state)));
}
BENCHMARK(BM_Gl2PairCheck)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_Sl2SeriesPairs(benchmark::State& state) {
    const auto a = sl2f3_series_action(24);
    for (auto _ : state) benchmark::DoNotOptimize(a.right_action_failures(policy(state)));
}
BENCHMARK(BM_Sl2SeriesPairs)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_EliminationChar3(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(elimination_check_char3(policy(state)));
}
BENCHMARK(BM_EliminationChar3)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_EliminationChar2(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(elimination_check_char2(policy(state)));
}
BENCHMARK(BM_EliminationChar2)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_H1Sl2(benchmark::State& state) {
    const auto a = sl2f3_series_action(24);
    for (auto _ : state) benchmark::DoNotOptimize(h1(a, policy(state)));
}
BENCHMARK(BM_H1Sl2)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
