// Serial versus OpenMP execution of the sweep kernels.

#include "ore/sweeps.hpp"

#include <benchmark/benchmark.h>

using namespace ore;

namespace {

ContextPtr quaternions() { return RingContext::quaternions(); }

ContextPtr frobenius_f8() {
    return RingContext::finite_field(RingContext::f8(), Endomorphism::frobenius(), Derivation::zero());
}

Execution mode_of(const benchmark::State& state) {
    return state.range(0) ? Execution::Parallel : Execution::Serial;
}

void BM_DegreeIdentity(benchmark::State& state) {
    auto ctx = quaternions();
    for (auto _ : state) {
        auto r = sweep_degree_identity(ctx, 1, 200, mode_of(state));
        benchmark::DoNotOptimize(r);
    }
    state.SetItemsProcessed(state.iterations() * 200);
}

void BM_ProductFormula(benchmark::State& state) {
    auto ctx = quaternions();
    for (auto _ : state) {
        auto r = sweep_product_formula(ctx, 2, 500, mode_of(state));
        benchmark::DoNotOptimize(r);
    }
    state.SetItemsProcessed(state.iterations() * 500);
}

void BM_WVerdicts(benchmark::State& state) {
    auto ctx = frobenius_f8();
    for (auto _ : state) {
        auto r = sweep_w_verdicts(ctx, 3, mode_of(state));
        benchmark::DoNotOptimize(r);
    }
}

void BM_MetroExhaustive(benchmark::State& state) {
    auto ctx = frobenius_f8();
    for (auto _ : state) {
        auto r = sweep_metro_exhaustive(ctx, mode_of(state));
        benchmark::DoNotOptimize(r);
    }
}

}  // namespace

BENCHMARK(BM_DegreeIdentity)->ArgName("parallel")->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ProductFormula)->ArgName("parallel")->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_WVerdicts)->ArgName("parallel")->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_MetroExhaustive)->ArgName("parallel")->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
