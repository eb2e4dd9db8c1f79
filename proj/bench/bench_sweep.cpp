// Serial reference vs OpenMP dispatch of a sweep, plus the per-opportunity
// resolver on a crowded subframe.

#include <benchmark/benchmark.h>

#include "rachsim/radio.hpp"
#include "rachsim/sweep.hpp"

using namespace rachsim;

namespace {

SweepSpec bench_spec() {
    SweepSpec spec;
    spec.cell_counts = {19};
    spec.ue_counts = {100, 400};
    spec.base.repetitions = 4;
    return spec;
}

void BM_SweepSerial(benchmark::State& state) {
    const SweepSpec spec = bench_spec();
    const auto points = expand_sweep(spec);
    for (auto _ : state) benchmark::DoNotOptimize(run_sweep_serial(spec, points));
}
BENCHMARK(BM_SweepSerial)->Unit(benchmark::kMillisecond);

void BM_SweepParallel(benchmark::State& state) {
    const SweepSpec spec = bench_spec();
    const auto points = expand_sweep(spec);
    const int threads = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(run_sweep_parallel(spec, points, threads));
}
BENCHMARK(BM_SweepParallel)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_ResolveOpportunity(benchmark::State& state) {
    const auto cells = hex_grid(19, 200.0);
    Rng rng(7);
    const auto ues = place_ues_uniform(static_cast<int>(state.range(0)), simulated_region(cells, 200.0), rng);
    const auto model = PathLossModel::log_distance(740e6);
    std::vector<PreambleTransmission> txs;
    for (const UeNode& ue : ues) {
        const int cell = static_cast<int>(rng.uniform_int(0, 18));
        txs.push_back({ue.id, cell, static_cast<int>(rng.uniform_int(0, 51)), 1, 0.0});
    }
    for (auto _ : state)
        benchmark::DoNotOptimize(resolve_opportunity(txs, cells, ues, model, ReceiverConfig{}));
}
BENCHMARK(BM_ResolveOpportunity)->Arg(50)->Arg(400);

}  // namespace

BENCHMARK_MAIN();
