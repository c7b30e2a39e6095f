#include <benchmark/benchmark.h>

#include "sdc/analysis.hpp"
#include "sdc/problems.hpp"
#include "sdc/quadrature.hpp"
#include "sdc/stability.hpp"
#include "sdc/sweeper.hpp"

namespace {

void BM_MakeRule(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  for (auto _ : state) {
    auto rule = sdc::make_rule(sdc::NodeFamily::GaussLegendre, m);
    benchmark::DoNotOptimize(rule);
  }
}
BENCHMARK(BM_MakeRule)->Arg(4)->Arg(8)->Arg(16);

void BM_LebesgueMax(benchmark::State& state) {
  const auto rule = sdc::make_rule(sdc::NodeFamily::Uniform, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(sdc::lebesgue_max(rule));
}
BENCHMARK(BM_LebesgueMax)->Arg(5)->Arg(10)->Arg(20);

void BM_PendulumStep(benchmark::State& state) {
  const auto rule = sdc::make_rule(sdc::NodeFamily::Uniform, 4);
  const auto sys = sdc::pendulum_problem();
  const auto scheme = sdc::SweepScheme::implicit_theta(1.0, static_cast<int>(state.range(0)));
  for (auto _ : state)
    benchmark::DoNotOptimize(sdc::step(rule, sys, scheme, sys.y0, 0.05, {}));
}
BENCHMARK(BM_PendulumStep)->Arg(3)->Arg(6);

void BM_VdpSisdcStep(benchmark::State& state) {
  const auto rule = sdc::make_rule(sdc::NodeFamily::Uniform, 4);
  const auto sys = sdc::vdp_problem(1.0);
  const auto scheme = sdc::SweepScheme::make(sdc::SweepKind::Sisdc, 3);
  for (auto _ : state)
    benchmark::DoNotOptimize(sdc::step(rule, sys, scheme, sys.y0, 0.05, {}));
}
BENCHMARK(BM_VdpSisdcStep);

void BM_CollocationSolve(benchmark::State& state) {
  const auto rule = sdc::make_rule(sdc::NodeFamily::GaussLegendre, static_cast<int>(state.range(0)));
  const auto sys = sdc::pendulum_problem();
  for (auto _ : state)
    benchmark::DoNotOptimize(sdc::collocation_solve(rule, sys, sys.y0, 0.01, {}));
}
BENCHMARK(BM_CollocationSolve)->Arg(4)->Arg(8);

void BM_Amplification(benchmark::State& state) {
  const auto rule = sdc::make_rule(sdc::NodeFamily::Uniform, 4);
  const auto scheme = sdc::SweepScheme::make(sdc::SweepKind::Picard, 3);
  for (auto _ : state)
    benchmark::DoNotOptimize(sdc::amplification(scheme, rule, {-2.0, 1.5}));
}
BENCHMARK(BM_Amplification);

}  // namespace

BENCHMARK_MAIN();
