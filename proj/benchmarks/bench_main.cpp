#include <benchmark/benchmark.h>

#include "bsac/detour.hpp"
#include "bsac/metric.hpp"
#include "bsac/witness.hpp"

namespace {

using namespace bsac;

void BM_Multiply(benchmark::State& state) {
    const BaseP p(2);
    const auto exp = static_cast<std::uint64_t>(state.range(0));
    const GroupElement g{normalize(mpz_class(12345), exp, p), 3};
    const GroupElement h{normalize(mpz_class(-777), exp / 2, p), -5};
    for (auto _ : state) benchmark::DoNotOptimize(multiply(g, h, p));
}
BENCHMARK(BM_Multiply)->Arg(2)->Arg(64)->Arg(512);

void BM_Ball(benchmark::State& state) {
    const auto C = standard_generators(BaseP(2));
    for (auto _ : state) {
        const Ball B = ball(state.range(0), C);
        benchmark::DoNotOptimize(B.size());
    }
}
BENCHMARK(BM_Ball)->DenseRange(8, 14, 2)->Unit(benchmark::kMillisecond);

void BM_WordLength(benchmark::State& state) {
    const BaseP p(2);
    const auto C = standard_generators(p);
    const WordMetric metric(C, 8);
    const GroupElement g{PFraction(1 << 10), 0};
    for (auto _ : state) benchmark::DoNotOptimize(metric.length(g, 24));
}
BENCHMARK(BM_WordLength)->Unit(benchmark::kMillisecond);

void BM_DetourRow(benchmark::State& state) {
    const auto C = standard_generators(BaseP(2));
    const Ball B = ball(state.range(0), C);
    for (auto _ : state) benchmark::DoNotOptimize(detour_row(B, state.range(0), 2, 1).N);
}
BENCHMARK(BM_DetourRow)->DenseRange(6, 10, 2)->Unit(benchmark::kMillisecond);

void BM_WitnessAudit(benchmark::State& state) {
    const auto C = standard_generators(BaseP(2));
    const auto K = derived_constants(C);
    const auto W = build_witnesses(3, 2, C);
    for (auto _ : state) benchmark::DoNotOptimize(witness_audit(W, C, K).inside_distance);
}
BENCHMARK(BM_WitnessAudit)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
