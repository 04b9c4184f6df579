#include <benchmark/benchmark.h>

#include "gkde/bandwidth.hpp"
#include "gkde/distributions.hpp"
#include "gkde/estimators.hpp"
#include "gkde/kernels.hpp"
#include "gkde/simulation.hpp"

namespace {

const gkde::Sample& maxwell_sample(std::size_t n)
{
  static const auto s1k = gkde::ParametricModel::maxwell(1.0).sample(1000, 7);
  static const auto s10k = gkde::ParametricModel::maxwell(1.0).sample(10000, 7);
  return n == 1000 ? s1k : s10k;
}

void KernelEval(benchmark::State& state)
{
  double t = 0.1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(gkde::kernel(1.3, 0.1, t));
    t = t < 4.0 ? t + 1e-4 : 0.1;
  }
}
BENCHMARK(KernelEval);

void DerivativeKernelEval(benchmark::State& state)
{
  double t = 0.1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(gkde::kernel_derivative(1.3, 0.1, t));
    t = t < 4.0 ? t + 1e-4 : 0.1;
  }
}
BENCHMARK(DerivativeKernelEval);

void PointEstimate(benchmark::State& state)
{
  const auto& sample = maxwell_sample(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(gkde::estimate_derivative(sample, 0.1, 1.5));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(PointEstimate)->Arg(1000)->Arg(10000);

void CurveEstimate500(benchmark::State& state)
{
  const auto& sample = maxwell_sample(static_cast<std::size_t>(state.range(0)));
  const gkde::EvaluationGrid grid(0.04, 4.0, 500);
  for (auto _ : state) {
    benchmark::DoNotOptimize(
      gkde::estimate_curve(sample, 0.1, grid, gkde::CurveTarget::derivative));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0) * 500);
}
BENCHMARK(CurveEstimate500)->Arg(1000)->Arg(10000);

void RuleOfThumb(benchmark::State& state)
{
  const auto& sample = maxwell_sample(1000);
  for (auto _ : state) {
    benchmark::DoNotOptimize(gkde::rule_of_thumb_bandwidth(sample));
  }
}
BENCHMARK(RuleOfThumb);

void Replication(benchmark::State& state)
{
  const gkde::sim::StudyConfig config{
    gkde::ParametricModel::weibull(3.0),
    {1000},
    1,
    7,
    std::nullopt,
    gkde::sim::Selector::rule_of_thumb(),
    gkde::CurveTarget::derivative,
  };
  std::size_t rep = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(gkde::sim::run_replication(config, 1000, rep++));
  }
}
BENCHMARK(Replication);

} // namespace

BENCHMARK_MAIN();
