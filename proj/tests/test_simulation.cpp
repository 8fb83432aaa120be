#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include "ruinkit/cramer_lundberg.hpp"
#include "ruinkit/models.hpp"
#include "ruinkit/quadrature.hpp"
#include "ruinkit/rng.hpp"
#include "ruinkit/simulation.hpp"
#include "ruinkit/special_functions.hpp"

using namespace ruinkit;

namespace {

const CramerLundbergParams kNet{2.0, 1.0, 1.0};

// grid occupancy of the negative half-line, walking jumps in order
double brute_force_occupation(const PathSample& path, double dt) {
    const auto n = static_cast<long>(path.horizon / dt);
    double level = path.x0;
    std::size_t jump = 0;
    long below = 0;
    for (long k = 1; k <= n; ++k) {
        const double s = dt * static_cast<double>(k);
        level = path.x0 + path.drift * s;
        while (jump < path.jump_times.size() && path.jump_times[jump] <= s) ++jump;
        for (std::size_t j = 0; j < jump; ++j) level -= path.jump_sizes[j];
        below += level < 0.0;
    }
    return dt * static_cast<double>(below);
}

}  // namespace

TEST_CASE("crossing algebra on a single jump") {
    // from 1 with unit drift, a claim of 3.5 at time 2 puts the path at -0.5;
    // it climbs back to zero at 2.5
    const auto path = PathSample::from_events(1.0, 1.0, 10.0, {2.0}, {3.5});
    REQUIRE(path.excursions.size() == 1);
    CHECK(path.excursions[0].start == 2.0);
    CHECK(path.excursions[0].end == doctest::Approx(2.5).epsilon(1e-15));
    CHECK(path.occupation_time == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(path.ruin_time == 2.0);
    CHECK(path.ruined());
}

TEST_CASE("a second claim inside the excursion extends it") {
    // at 2.25 the level is -0.25; another claim of 0.25 puts it at -0.5,
    // so the excursion ends at 2.75
    const auto path = PathSample::from_events(1.0, 1.0, 10.0, {2.0, 2.25}, {3.5, 0.25});
    REQUIRE(path.excursions.size() == 1);
    CHECK(path.excursions[0].end == doctest::Approx(2.75).epsilon(1e-15));
    CHECK(path.occupation_time == doctest::Approx(0.75).epsilon(1e-15));
}

TEST_CASE("an excursion is clipped at the horizon") {
    const auto path = PathSample::from_events(0.5, 1.0, 3.0, {2.0}, {4.0});
    REQUIRE(path.excursions.size() == 1);
    CHECK(path.excursions[0].start == 2.0);
    CHECK(path.excursions[0].end == 3.0);  // would end at 3.5
    CHECK(path.occupation_time == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("claims that keep the path nonnegative cause no excursion") {
    const auto path = PathSample::from_events(1.0, 1.0, 5.0, {1.0, 3.0}, {0.5, 1.0});
    CHECK(path.excursions.empty());
    CHECK(path.occupation_time == 0.0);
    CHECK_FALSE(path.ruined());
}

TEST_CASE("event list validation") {
    CHECK_THROWS_AS(PathSample::from_events(1.0, 1.0, 5.0, {2.0, 1.0}, {1.0, 1.0}),
                    std::invalid_argument);
    CHECK_THROWS_AS(PathSample::from_events(1.0, 1.0, 5.0, {6.0}, {1.0}),
                    std::invalid_argument);
    CHECK_THROWS_AS(PathSample::from_events(1.0, 1.0, 5.0, {1.0}, {1.0, 2.0}),
                    std::invalid_argument);
}

TEST_CASE("level reconstruction agrees with the event walk") {
    const auto path = PathSample::from_events(1.0, 2.0, 10.0, {1.0, 4.0}, {3.0, 2.0});
    CHECK(path.level_at(0.5) == doctest::Approx(2.0));
    CHECK(path.level_at(1.0) == doctest::Approx(0.0));
    CHECK(path.level_at(2.0) == doctest::Approx(2.0));
    CHECK(path.level_at(4.0) == doctest::Approx(4.0));   // 1 + 8 - 3 - 2
    CHECK(path.level_at(10.0) == doctest::Approx(16.0));
}

TEST_CASE("vanishing claim rate leaves the surplus above zero") {
    const CramerLundbergParams calm{2.0, 1e-9, 1.0};
    for (std::uint64_t i = 0; i < 100; ++i) {
        PathRng rng(1234, i);
        const auto path = simulate_path(calm, 0.0, 1.0, rng);
        CHECK(path.occupation_time == 0.0);
        CHECK(path.jump_times.empty());
    }
}

TEST_CASE("segment algebra agrees with brute-force grid occupancy") {
    const CramerLundbergParams busy{1.0, 2.0, 1.0};
    const double dt = 1e-6;
    for (std::uint64_t i = 0; i < 100; ++i) {
        PathRng rng(555, i);
        const auto path = simulate_path(busy, 0.5, 1.0, rng);
        const double brute = brute_force_occupation(path, dt);
        CHECK(std::abs(brute - path.occupation_time) <= 2.0 * dt);
    }
}

TEST_CASE("estimates are reproducible and thread-count invariant") {
    const auto a = simulate_coupled(kNet, 1.0, 0.2, 2.0, 1.0, 40000, 99, 1);
    const auto b = simulate_coupled(kNet, 1.0, 0.2, 2.0, 1.0, 40000, 99, 4);
    CHECK(a.classical == b.classical);
    CHECK(a.cumulative == b.cumulative);
    CHECK(a.parisian == b.parisian);
    CHECK(a.exp_aggregate == b.exp_aggregate);
    CHECK(a.exp_per_excursion == b.exp_per_excursion);
    CHECK(a.occupation_sum == b.occupation_sum);  // bitwise, block-ordered reduction
    const auto c = simulate_coupled(kNet, 1.0, 0.2, 2.0, 1.0, 40000, 99, 4);
    CHECK(c.occupation_sum == b.occupation_sum);
}

TEST_CASE("single-quantity estimators match the coupled run") {
    const auto counts = simulate_coupled(kNet, 1.0, 0.2, 2.0, 1.0, 20000, 7, 2);
    const auto classical = estimate_classical_ruin(kNet, 1.0, 1.0, 20000, 7, 2);
    const auto cumulative = estimate_cumulative_parisian(kNet, 1.0, 0.2, 1.0, 20000, 7, 2);
    const auto exponential = estimate_exponential_parisian(kNet, 1.0, 2.0, 1.0, 20000, 7, 2);
    CHECK(classical.value == counts.estimate(counts.classical, "x").value);
    CHECK(cumulative.value == counts.estimate(counts.cumulative, "x").value);
    CHECK(exponential.value == counts.estimate(counts.exp_per_excursion, "x").value);
    CHECK(classical.std_error ==
          doctest::Approx(std::sqrt(classical.value * (1.0 - classical.value) / 20000.0)));
}

TEST_CASE("an allowance beyond the horizon never ruins") {
    const auto est = estimate_cumulative_parisian(kNet, 0.0, 2.0, 1.0, 5000, 3, 2);
    CHECK(est.value == 0.0);
    CHECK(est.std_error == 0.0);
}

TEST_CASE("pathwise ruin-time orderings hold on every path") {
    for (double x : {0.0, 1.0}) {
        const auto counts = simulate_coupled(kNet, x, 0.2, 2.0, 1.0, 100000, 21, 2);
        CHECK(counts.ordering_violations == 0);
        // aggregate clock ruins at least as often as per-excursion clocks
        CHECK(counts.exp_aggregate >= counts.exp_per_excursion);
        CHECK(counts.parisian <= counts.cumulative);
        CHECK(counts.cumulative <= counts.classical);
    }
}

TEST_CASE("mean occupation matches the closed-form first moment") {
    const auto counts = simulate_coupled(kNet, 0.0, 0.2, 2.0, 1.0, 1000000, 31, 0);
    const OccupationLaw law(kNet, 0.0, 1.0);
    const double moment = adaptive_integrate(
        [&](double s) { return s * law.density(s); }, 1e-12, 1.0 - 1e-12, 1e-9);
    CHECK(std::abs(counts.mean_occupation() - moment) <=
          3.0 * counts.mean_occupation_std_error());
}

TEST_CASE("per-excursion and aggregate exponential clocks agree in law") {
    const auto counts = simulate_coupled(kNet, 1.0, 0.2, 2.0, 1.0, 400000, 17, 0);
    const auto kappa = counts.estimate(counts.exp_per_excursion, "kappa");
    const auto agg = counts.estimate(counts.exp_aggregate, "agg");
    const double joint_se = std::hypot(kappa.std_error, agg.std_error);
    CHECK(std::abs(kappa.value - agg.value) <= 3.0 * joint_se);
    // and both agree with the closed form
    const double formula = exponential_parisian_probability(kNet, 1.0, 2.0, 1.0);
    CHECK(std::abs(kappa.value - formula) <= 3.0 * kappa.std_error);
}

TEST_CASE("exact-path survival estimate matches the closed form") {
    const auto counts = simulate_coupled(kNet, 0.0, 0.2, 2.0, 1.0, 400000, 13, 0);
    const auto tau = counts.estimate(counts.classical, "classical");
    const double formula = 1.0 - survival_probability(kNet, 1.0);
    CHECK(std::abs(tau.value - formula) <= 3.0 * tau.std_error);
}

TEST_CASE("occupation law matches the exact-path histogram with capital") {
    const auto hist = simulate_cl_occupation(kNet, 1.0, 1.0, 1000000, 91, 25, 0);
    const OccupationLaw law(kNet, 1.0, 1.0);
    for (std::size_t i = 0; i <= hist.n_bins(); ++i) {
        const double f = law.cdf(hist.edge(i));
        CHECK(std::abs(hist.cdf_at_edge(i) - f) <= 3.0 * hist.cdf_std_error(i) + 1e-9);
    }
}

TEST_CASE("occupation law matches the histogram without net profit") {
    const CramerLundbergParams heavy{1.0, 2.0, 1.0};
    const auto hist = simulate_cl_occupation(heavy, 0.0, 1.0, 200000, 92, 20, 0);
    const OccupationLaw law(heavy, 0.0, 1.0);
    for (std::size_t i = 0; i <= hist.n_bins(); ++i) {
        const double f = law.cdf(hist.edge(i));
        CHECK(std::abs(hist.cdf_at_edge(i) - f) <= 3.0 * hist.cdf_std_error(i) + 1e-9);
    }
}

TEST_CASE("occupation histogram accounting") {
    const auto hist = simulate_cl_occupation(kNet, 0.0, 1.0, 50000, 5, 25, 2);
    std::uint64_t total = hist.atom_count;
    for (auto c : hist.counts) total += c;
    CHECK(total == hist.n_paths);
    CHECK(hist.cdf_at_edge(0) == doctest::Approx(static_cast<double>(hist.atom_count) / 50000.0));
    CHECK(hist.cdf_at_edge(25) == doctest::Approx(1.0));
    CHECK(hist.edge(25) == doctest::Approx(1.0));
}

TEST_CASE("ziggurat normals have the right moments and tails") {
    PathRng rng(2024, 0);
    const long n = 2000000;
    double sum = 0.0, sq = 0.0;
    long above1 = 0, above3 = 0;
    for (long i = 0; i < n; ++i) {
        const double z = rng.normal();
        sum += z;
        sq += z * z;
        above1 += z > 1.0;
        above3 += std::abs(z) > 3.0;
    }
    const double mean = sum / n;
    const double var = sq / n - mean * mean;
    CHECK(std::abs(mean) <= 4.0 / std::sqrt(static_cast<double>(n)));
    CHECK(var == doctest::Approx(1.0).epsilon(5e-3));
    const double p1 = normal_tail(1.0);
    CHECK(std::abs(static_cast<double>(above1) / n - p1) <=
          4.0 * std::sqrt(p1 * (1.0 - p1) / n));
    const double p3 = 2.0 * normal_tail(3.0);
    CHECK(std::abs(static_cast<double>(above3) / n - p3) <=
          4.0 * std::sqrt(p3 * (1.0 - p3) / n));
}

TEST_CASE("strong brownian drift keeps occupation at zero") {
    const auto res = simulate_bm_occupation(BrownianParams{100.0, 1.0}, 1.0, 1.0, 1e-3, 20000,
                                            77, 0.1, 10, 2);
    CHECK(res.classical.value <= 1e-3);
    CHECK(res.cumulative.value == 0.0);
}

TEST_CASE("near-driftless brownian occupation is arcsine symmetric") {
    const double dt = 1e-3;
    const auto res = simulate_bm_occupation(BrownianParams{0.01, 1.0}, 0.0, 1.0, dt, 200000,
                                            123, 0.1, 20, 2);
    CHECK(std::abs(res.histogram.cdf_at_edge(10) - 0.5) <=
          3.0 * res.histogram.cdf_std_error(10) + 2.0 * std::sqrt(dt) + 0.01);
}

TEST_CASE("simulation argument guards") {
    CHECK_THROWS_AS(simulate_coupled(kNet, -1.0, 0.2, 2.0, 1.0, 10, 1), std::domain_error);
    CHECK_THROWS_AS(simulate_coupled(kNet, 1.0, 0.2, 2.0, 0.0, 10, 1), std::domain_error);
    CHECK_THROWS_AS(simulate_coupled(kNet, 1.0, 0.2, 2.0, 1.0, 0, 1), std::domain_error);
    CHECK_THROWS_AS(
        simulate_bm_occupation(BrownianParams{1.0, 1.0}, 0.0, 1.0, 2.0, 10, 1, 0.1),
        std::domain_error);
}
