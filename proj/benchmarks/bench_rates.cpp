#include <sfwm/cw.hpp>
#include <sfwm/presets.hpp>
#include <sfwm/pulsed.hpp>
#include <sfwm/sweep.hpp>

#include <benchmark/benchmark.h>

namespace
{
using namespace sfwm;

void BM_CwSingleRate(benchmark::State &state)
{
    const auto ring = algaas::ring();
    const double gc = algaas::gamma_c();
    const auto c = CouplingConfig::add_drop_distinct(1.3 * gc, 0.7 * gc, gc);
    for (auto _ : state)
    {
        benchmark::DoNotOptimize(cw_single_rate(ring, c, algaas::kPower));
    }
}
BENCHMARK(BM_CwSingleRate);

void BM_PulsedClosedForm(benchmark::State &state)
{
    const auto ring = algaas::ring();
    const double gc = algaas::gamma_c();
    const auto c = CouplingConfig::add_drop_distinct(1.37 * gc, 1.83 * gc, gc);
    for (auto _ : state)
    {
        benchmark::DoNotOptimize(pulsed_single_prob(ring, c, algaas::kPulseEnergy, 10.0 * c.pump_gamma()));
    }
}
BENCHMARK(BM_PulsedClosedForm);

void BM_PulsedNumericFlattop(benchmark::State &state)
{
    const auto ring = algaas::ring();
    const double gc = algaas::gamma_c();
    const auto c = CouplingConfig::all_pass(1.5 * gc, gc);
    const FlattopSpectrum spectrum{static_cast<double>(state.range(0)) * c.pump_gamma()};
    for (auto _ : state)
    {
        benchmark::DoNotOptimize(pulsed_single_prob_numeric(ring, c, algaas::kPulseEnergy, spectrum));
    }
}
BENCHMARK(BM_PulsedNumericFlattop)->Arg(10)->Arg(100)->Unit(benchmark::kMillisecond);

void BM_CwSweep(benchmark::State &state)
{
    const auto n = static_cast<int>(state.range(0));
    const auto spec = figure2_specs(n)[2];
    for (auto _ : state)
    {
        benchmark::DoNotOptimize(run_sweep(spec, 1).rows.size());
    }
    state.SetItemsProcessed(state.iterations() * n * n);
}
BENCHMARK(BM_CwSweep)->Arg(50)->Arg(200)->Unit(benchmark::kMillisecond);
} // namespace
