#include <benchmark/benchmark.h>

#include "ruinkit/brownian.hpp"
#include "ruinkit/cramer_lundberg.hpp"
#include "ruinkit/laplace.hpp"
#include "ruinkit/quadrature.hpp"
#include "ruinkit/special_functions.hpp"

namespace {

const ruinkit::CramerLundbergParams kCl{2.0, 1.0, 1.0};
const ruinkit::BrownianParams kBm{1.0, 1.0};

void BM_BesselSeries(benchmark::State& state) {
    const double s = static_cast<double>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(ruinkit::detail::bessel_i_series_scaled(0, s));
}
BENCHMARK(BM_BesselSeries)->Arg(1)->Arg(10);

void BM_BesselIntegral(benchmark::State& state) {
    const double s = static_cast<double>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(ruinkit::detail::bessel_i_integral_scaled(0, s));
}
BENCHMARK(BM_BesselIntegral)->Arg(20)->Arg(200);

void BM_SurvivalZero(benchmark::State& state) {
    const double t = static_cast<double>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(ruinkit::survival_probability(kCl, t));
}
BENCHMARK(BM_SurvivalZero)->Arg(1)->Arg(50);

void BM_SurvivalX(benchmark::State& state) {
    for (auto _ : state)
        benchmark::DoNotOptimize(ruinkit::survival_probability(kCl, 1.0, 1.0));
}
BENCHMARK(BM_SurvivalX);

void BM_OccupationLawBuild(benchmark::State& state) {
    const auto panels = static_cast<std::size_t>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(ruinkit::OccupationLaw(kCl, 1.0, 1.0, panels));
}
BENCHMARK(BM_OccupationLawBuild)->Arg(512)->Arg(2048);

void BM_CumulativeParisianCl(benchmark::State& state) {
    for (auto _ : state)
        benchmark::DoNotOptimize(ruinkit::cumulative_parisian_probability(kCl, 1.0, 0.2, 1.0));
}
BENCHMARK(BM_CumulativeParisianCl);

void BM_CumulativeParisianBm(benchmark::State& state) {
    for (auto _ : state)
        benchmark::DoNotOptimize(ruinkit::cumulative_parisian_probability(kBm, 0.5, 0.1, 1.0));
}
BENCHMARK(BM_CumulativeParisianBm);

void BM_ClosedDoubleTransform(benchmark::State& state) {
    for (auto _ : state)
        benchmark::DoNotOptimize(ruinkit::closed_double_transform(kCl, 1.0, 0.7, 1.3));
}
BENCHMARK(BM_ClosedDoubleTransform);

void BM_AdaptiveGaussKronrod(benchmark::State& state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(ruinkit::adaptive_integrate(
            [](double u) { return std::exp(-u * u); }, 0.0, 5.0, 1e-10));
    }
}
BENCHMARK(BM_AdaptiveGaussKronrod);

}  // namespace

BENCHMARK_MAIN();
