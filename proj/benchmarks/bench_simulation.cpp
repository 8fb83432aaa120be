#include <benchmark/benchmark.h>

#include "ruinkit/models.hpp"
#include "ruinkit/rng.hpp"
#include "ruinkit/simulation.hpp"

namespace {

const ruinkit::CramerLundbergParams kCl{2.0, 1.0, 1.0};

void BM_NormalDraw(benchmark::State& state) {
    ruinkit::PathRng rng(1, 0);
    for (auto _ : state) benchmark::DoNotOptimize(rng.normal());
}
BENCHMARK(BM_NormalDraw);

void BM_ExponentialDraw(benchmark::State& state) {
    ruinkit::PathRng rng(1, 0);
    for (auto _ : state) benchmark::DoNotOptimize(rng.exponential(1.0));
}
BENCHMARK(BM_ExponentialDraw);

void BM_ClPath(benchmark::State& state) {
    const double t = static_cast<double>(state.range(0));
    std::uint64_t i = 0;
    for (auto _ : state) {
        ruinkit::PathRng rng(7, i++);
        benchmark::DoNotOptimize(ruinkit::simulate_path(kCl, 1.0, t, rng));
    }
    state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_ClPath)->Arg(1)->Arg(10);

void BM_CoupledIndicators(benchmark::State& state) {
    std::uint64_t i = 0;
    for (auto _ : state) {
        ruinkit::PathRng rng(7, i++);
        const auto path = ruinkit::simulate_path(kCl, 1.0, 1.0, rng);
        benchmark::DoNotOptimize(ruinkit::evaluate_ruin(path, 0.2, 2.0, rng));
    }
    state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_CoupledIndicators);

void BM_BrownianSteps(benchmark::State& state) {
    // one path chunk of 10^4 Euler steps, the criterion-8 workload unit
    const ruinkit::BrownianParams m{1.0, 1.0};
    const double dt = 1e-4;
    const double drift = m.c * dt;
    const double vol = m.sigma * std::sqrt(dt);
    std::uint64_t i = 0;
    for (auto _ : state) {
        ruinkit::PathRng rng(9, i++);
        double level = 0.5;
        std::uint64_t below = 0;
        for (int k = 0; k < 10000; ++k) {
            level += drift + vol * rng.normal();
            below += level < 0.0;
        }
        benchmark::DoNotOptimize(below);
    }
    state.SetItemsProcessed(state.iterations() * 10000);
}
BENCHMARK(BM_BrownianSteps);

}  // namespace

BENCHMARK_MAIN();
