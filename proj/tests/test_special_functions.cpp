#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "ruinkit/quadrature.hpp"
#include "ruinkit/special_functions.hpp"

using namespace ruinkit;

namespace {

// independent oracle: plain power series, no scaling tricks shared with the
// library routines
double series_oracle(int order, double s) {
    double term = 1.0;
    for (int j = 1; j <= order; ++j) term *= 0.5 * s / j;
    double sum = term;
    for (int m = 1; m < 200; ++m) {
        term *= 0.25 * s * s / (static_cast<double>(m) * (m + order));
        sum += term;
        if (term < sum * 1e-18) break;
    }
    return sum;
}

}  // namespace

TEST_CASE("bessel values at zero") {
    CHECK(bessel_i(0, 0.0) == 1.0);
    CHECK(bessel_i(1, 0.0) == 0.0);
    CHECK(bessel_i(2, 0.0) == 0.0);
}

TEST_CASE("bessel i0 at one against the series oracle") {
    const double oracle = series_oracle(0, 1.0);
    CHECK(bessel_i(0, 1.0) == doctest::Approx(oracle).epsilon(1e-13));
    CHECK(bessel_i(0, 1.0) == doctest::Approx(1.26606587775).epsilon(1e-10));
}

TEST_CASE("bessel argument guards") {
    CHECK_THROWS_AS(bessel_i(0, -0.1), std::domain_error);
    CHECK_THROWS_AS(bessel_i(3, 1.0), std::domain_error);
}

TEST_CASE("series and integral routes agree across the range") {
    for (int i = 0; i < 25; ++i) {
        const double s = 1e-3 * std::pow(5e4, i / 24.0);
        for (int order = 0; order <= 2; ++order) {
            const double a = detail::bessel_i_series_scaled(order, s);
            const double b = detail::bessel_i_integral_scaled(order, s);
            CHECK(std::abs(a - b) <= 1e-10 * std::max(a, 1e-300));
        }
    }
}

TEST_CASE("bessel recurrence I1 = (z/2)(I0 - I2)") {
    for (int i = 0; i < 25; ++i) {
        const double z = 1e-3 * std::pow(5e4, i / 24.0);
        const double lhs = bessel_i(1, z);
        const double rhs = 0.5 * z * (bessel_i(0, z) - bessel_i(2, z));
        CHECK(lhs == doctest::Approx(rhs).epsilon(1e-10));
    }
}

TEST_CASE("scaled and plain forms are consistent") {
    for (double s : {0.5, 5.0, 20.0, 100.0}) {
        for (int order = 0; order <= 2; ++order) {
            CHECK(bessel_i_scaled(order, s) * std::exp(s) ==
                  doctest::Approx(bessel_i(order, s)).epsilon(1e-13));
        }
    }
}

TEST_CASE("normal tail anchors") {
    CHECK(normal_tail(0.0) == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(normal_tail(40.0) <= 1e-300);
    // quadrature oracle for N(1): integrate the gaussian density over [1, 40]
    const double oracle = adaptive_integrate(
        [](double y) {
            return std::exp(-0.5 * y * y) / std::sqrt(2.0 * std::numbers::pi);
        },
        1.0, 40.0, 1e-12);
    CHECK(normal_tail(1.0) == doctest::Approx(oracle).epsilon(1e-11));
    CHECK(normal_tail(1.0) == doctest::Approx(0.158655253931).epsilon(1e-10));
}

TEST_CASE("normal tail symmetry") {
    for (double x : {-3.0, -0.7, 0.3, 1.9, 4.2}) {
        CHECK(normal_tail(x) + normal_tail(-x) == doctest::Approx(1.0).epsilon(1e-14));
    }
}

TEST_CASE("chebyshev2 rule integrates the semicircle weight") {
    for (int n : {1, 4, 64}) {
        const auto rule = QuadratureRule::chebyshev2(n);
        CHECK(integrate(rule, [](double) { return 1.0; }) ==
              doctest::Approx(std::numbers::pi / 2.0).epsilon(1e-14));
    }
}

TEST_CASE("chebyshev2 polynomial exactness") {
    const auto rule = QuadratureRule::chebyshev2(4);  // exact through degree 7
    CHECK(integrate(rule, [](double u) { return u * u; }) ==
          doctest::Approx(std::numbers::pi / 8.0).epsilon(1e-14));
    CHECK(integrate(rule, [](double u) { return u * u * u * u; }) ==
          doctest::Approx(std::numbers::pi / 16.0).epsilon(1e-14));
    CHECK(integrate(rule, [](double u) { return u * u * u; }) == doctest::Approx(0.0));
}

TEST_CASE("chebyshev2 against the trapezoid oracle for 1/(b+au)") {
    const double b = 2.0, a = 1.0;
    // oracle: high-resolution trapezoid of the smooth substituted integrand
    // sin^2(phi) / (b + a cos(phi)) over [0, pi]
    const long m = 200000;
    double oracle = 0.0;
    for (long j = 1; j < m; ++j) {
        const double phi = std::numbers::pi * j / m;
        const double s = std::sin(phi);
        oracle += s * s / (b + a * std::cos(phi));
    }
    oracle *= std::numbers::pi / m;
    const double analytic = std::numbers::pi * (b - std::sqrt(b * b - a * a)) / (a * a);
    const auto rule = QuadratureRule::chebyshev2(64);
    const double computed = integrate(rule, [&](double u) { return 1.0 / (b + a * u); });
    CHECK(computed == doctest::Approx(oracle).epsilon(1e-9));
    CHECK(computed == doctest::Approx(analytic).epsilon(1e-12));
}

TEST_CASE("streaming chebyshev sum matches the materialized rule") {
    const auto rule = QuadratureRule::chebyshev2(17);
    const auto f = [](double u) { return std::exp(-0.8 * u) / (2.0 + u); };
    CHECK(chebyshev2_sum(f, 17) == doctest::Approx(integrate(rule, f)).epsilon(1e-15));
}

TEST_CASE("chebyshev2 node doubling is stable for the survival integrand class") {
    // smooth model integrand: exp(-k t u) / (beta + k u) with benign parameters
    const double beta = 3.0, k = 2.0 * std::sqrt(2.0), t = 1.0;
    const auto f = [&](double u) { return std::exp(-k * t * u) / (beta + k * u); };
    const double a = chebyshev2_sum(f, 64);
    const double b = chebyshev2_sum(f, 128);
    CHECK(std::abs(a - b) < 1e-12 * std::abs(b));
}

TEST_CASE("legendre rule") {
    const auto rule = QuadratureRule::legendre(6);
    CHECK(integrate(rule, [](double u) { return u * u; }) ==
          doctest::Approx(2.0 / 3.0).epsilon(1e-14));
    CHECK(integrate(rule, [](double u) { return std::pow(u, 10.0); }) ==
          doctest::Approx(2.0 / 11.0).epsilon(1e-13));  // degree 10 <= 2n-1 = 11
    CHECK(integrate(rule, [](double u) { return std::cos(u); }) ==
          doctest::Approx(2.0 * std::sin(1.0)).epsilon(1e-12));
}

TEST_CASE("adaptive integration basics") {
    CHECK(adaptive_integrate([](double u) { return u * u; }, -1.0, 1.0, 1e-10) ==
          doctest::Approx(2.0 / 3.0).epsilon(1e-12));
    const auto res = integrate_adaptive([](double u) { return std::exp(u); }, 0.0, 2.0, 1e-10);
    CHECK(res.value == doctest::Approx(std::exp(2.0) - 1.0).epsilon(1e-12));
    CHECK(res.error <= 1e-10 * std::abs(res.value) + 1e-14);
}

TEST_CASE("adaptive integration handles an integrable endpoint singularity") {
    const double v = adaptive_integrate([](double u) { return 1.0 / std::sqrt(u); }, 0.0, 1.0,
                                        1e-9);
    CHECK(v == doctest::Approx(2.0).epsilon(1e-6));
}

TEST_CASE("adaptive integration reports non-convergence with its best estimate") {
    try {
        adaptive_integrate([](double u) { return 1.0 / u; }, 0.0, 1.0, 1e-10, "divergent test");
        FAIL("expected QuadratureError");
    } catch (const QuadratureError& e) {
        CHECK(e.context() == "divergent test");
        CHECK(e.best_estimate() > 1.0);
    }
}

TEST_CASE("adaptive integration argument guards") {
    CHECK_THROWS_AS(adaptive_integrate([](double) { return 1.0; }, 1.0, 0.0, 1e-8),
                    std::domain_error);
    CHECK_THROWS_AS(adaptive_integrate([](double) { return 1.0; }, 0.0, 1.0, -1.0),
                    std::domain_error);
}
