#include <sfwm/optimizer.hpp>

#include <benchmark/benchmark.h>

namespace
{
using namespace sfwm;

void BM_NumericOptimum(benchmark::State &state)
{
    const auto geometry = static_cast<Geometry>(state.range(0));
    const OptimizationTarget target{Objective::TwoPhoton, PumpRegime::BroadbandPulse};
    for (auto _ : state)
    {
        benchmark::DoNotOptimize(numeric_optimum(geometry, target).peak_value);
    }
}
BENCHMARK(BM_NumericOptimum)
    ->Arg(static_cast<int>(Geometry::AllPassIdentical))
    ->Arg(static_cast<int>(Geometry::AddDropDistinct))
    ->Unit(benchmark::kMillisecond);

void BM_CrossValidate(benchmark::State &state)
{
    for (auto _ : state)
    {
        benchmark::DoNotOptimize(cross_validate_optima().failures());
    }
}
BENCHMARK(BM_CrossValidate)->Unit(benchmark::kMillisecond);
} // namespace

BENCHMARK_MAIN();
