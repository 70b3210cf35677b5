#include <benchmark/benchmark.h>

#include "pmqed/exact_diag.hpp"
#include "pmqed/observables.hpp"

using namespace pmqed;

namespace {

void BM_closed_form_energy(benchmark::State& state)
{
    const SystemParams p = resonant_params(0.05, 1.0);
    const LevelLabel label = LevelLabel::dressed(2, Branch::minus);
    for (auto _ : state)
        benchmark::DoNotOptimize(dsp_energy(label, p));
}
BENCHMARK(BM_closed_form_energy);

void BM_generic_rs(benchmark::State& state)
{
    const SystemParams p = resonant_params(0.05, 1.0);
    const LevelLabel label = LevelLabel::dressed(static_cast<int>(state.range(0)),
                                                 Branch::minus);
    for (auto _ : state)
        benchmark::DoNotOptimize(generic_rs(label, p, 2).e2);
}
BENCHMARK(BM_generic_rs)->Arg(0)->Arg(3)->Arg(6);

void BM_build_hamiltonian(benchmark::State& state)
{
    const SystemParams p = resonant_params(0.05, 1.0);
    const int n_max = static_cast<int>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(build(p, n_max).entries.norm());
}
BENCHMARK(BM_build_hamiltonian)->Arg(16)->Arg(64)->Arg(256);

void BM_eigensolve(benchmark::State& state)
{
    const SystemParams p = resonant_params(0.05, 1.0);
    const TruncatedHamiltonian h = build(p, static_cast<int>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(eigensolve(h).eigenvalues[0]);
}
BENCHMARK(BM_eigensolve)->Arg(16)->Arg(32)->Arg(64)->Arg(128)
    ->Unit(benchmark::kMillisecond);

void BM_converged_spectrum(benchmark::State& state)
{
    const SystemParams p = resonant_params(0.05, 1.0);
    for (auto _ : state)
        benchmark::DoNotOptimize(converged_spectrum(p, 7).eigenvalues[0]);
}
BENCHMARK(BM_converged_spectrum)->Unit(benchmark::kMillisecond);

void BM_bs_shift_dsp(benchmark::State& state)
{
    const SystemParams p = resonant_params(0.05, 1.0);
    for (auto _ : state)
        benchmark::DoNotOptimize(bs_shift_dsp(0, Branch::minus, p).total);
}
BENCHMARK(BM_bs_shift_dsp);

void BM_populations(benchmark::State& state)
{
    const SystemParams p = resonant_params(0.05, 1.0);
    for (auto _ : state)
        benchmark::DoNotOptimize(
            populations(LevelLabel::ground(), p, 2).entries.size());
}
BENCHMARK(BM_populations);

} // namespace

BENCHMARK_MAIN();
