#include <sfwm/presets.hpp>
#include <sfwm/schmidt.hpp>

#include <benchmark/benchmark.h>

namespace
{
using namespace sfwm;

const PumpSpec kPulse = PumpSpec::pulsed_with_factor(algaas::kPulseEnergy, algaas::kBandwidthFactor);

void BM_Discretize(benchmark::State &state)
{
    const auto ring = algaas::ring();
    const double gc = algaas::gamma_c();
    const auto c = CouplingConfig::add_drop_distinct(1.46 * gc, 3.17 * gc, gc);
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state)
    {
        benchmark::DoNotOptimize(discretize_wavepacket(ring, c, kPulse, {n, 20.0}).size());
    }
}
BENCHMARK(BM_Discretize)->Arg(128)->Arg(512)->Unit(benchmark::kMillisecond);

// Symmetric eigen path for the real kernel.
void BM_SchmidtNumber(benchmark::State &state)
{
    const auto ring = algaas::ring();
    const double gc = algaas::gamma_c();
    const auto c = CouplingConfig::add_drop_distinct(1.46 * gc, 3.17 * gc, gc);
    const auto grid = discretize_wavepacket(ring, c, kPulse, {static_cast<int>(state.range(0)), 20.0});
    for (auto _ : state)
    {
        benchmark::DoNotOptimize(schmidt_spectrum(grid).schmidt_number);
    }
}
BENCHMARK(BM_SchmidtNumber)->Arg(128)->Arg(256)->Arg(512)->Unit(benchmark::kMillisecond);

// General complex SVD path.
void BM_SchmidtComplexKernel(benchmark::State &state)
{
    const auto ring = algaas::ring();
    const double gc = algaas::gamma_c();
    const auto c = CouplingConfig::add_drop_distinct(1.46 * gc, 3.17 * gc, gc);
    const auto grid = discretize_wavepacket(ring, c, kPulse, {static_cast<int>(state.range(0)), 20.0})
                          .scaled({0.6, 0.8});
    for (auto _ : state)
    {
        benchmark::DoNotOptimize(schmidt_spectrum(grid).schmidt_number);
    }
}
BENCHMARK(BM_SchmidtComplexKernel)->Arg(128)->Arg(256)->Unit(benchmark::kMillisecond);
} // namespace
