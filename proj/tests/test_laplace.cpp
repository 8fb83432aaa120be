#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "ruinkit/laplace.hpp"
#include "ruinkit/models.hpp"

using namespace ruinkit;

namespace {

const CramerLundbergParams kNet{2.0, 1.0, 1.0};
const BrownianParams kBm{1.0, 1.0};

}  // namespace

TEST_CASE("brownian closed transform by direct substitution") {
    // phi(2)/(2 phi(1)) with phi(q) = sqrt(1 + 2q) - 1
    const double want = (std::sqrt(5.0) - 1.0) / (2.0 * (std::sqrt(3.0) - 1.0));
    CHECK(closed_double_transform(kBm, 1.0, 1.0) == doctest::Approx(want).epsilon(1e-14));
}

TEST_CASE("closed transform preconditions") {
    const CramerLundbergParams no_net{1.0, 2.0, 1.0};
    CHECK_THROWS_AS(closed_double_transform(no_net, 1.0, 1.0), std::domain_error);
    CHECK_THROWS_AS(closed_double_transform(no_net, 1.0, 1.0, 1.0), std::domain_error);
    CHECK_THROWS_AS(closed_double_transform(kNet, 0.0, 1.0), std::domain_error);
    CHECK_THROWS_AS(closed_double_transform(kNet, -1.0, 1.0, 1.0), std::domain_error);
}

TEST_CASE("large q limit approaches 1 / (c phi(p))") {
    for (double p : {0.5, 1.0, 2.0}) {
        const double v = closed_double_transform(kNet, p, 1e8);
        CHECK(v * kNet.c * lundberg_roots(kNet, p).phi == doctest::Approx(1.0).epsilon(1e-3));
    }
}

TEST_CASE("positive-capital closed transform reduces at x = 0") {
    for (double p : {0.5, 1.0, 3.0}) {
        for (double q : {0.5, 1.3, 4.0}) {
            CHECK(closed_double_transform(kNet, 0.0, p, q) ==
                  doctest::Approx(closed_double_transform(kNet, p, q)).epsilon(1e-12));
        }
    }
}

TEST_CASE("positive-capital closed transform large q limit") {
    const double x = 1.0;
    for (double p : {0.7, 1.5}) {
        const double theta = lundberg_roots(kNet, p).theta;
        const double want =
            1.0 / p - (kNet.alpha + theta) / (kNet.alpha * p) * std::exp(theta * x);
        CHECK(closed_double_transform(kNet, x, p, 1e8) ==
              doctest::Approx(want).epsilon(1e-3));
    }
}

TEST_CASE("numeric transform of the constant distribution") {
    // q ~ 0 makes the occupation factor 1, so the transform is 1/p
    const auto src = occupation_transform_source(kNet, 0.0, 40.0);
    const double v = numeric_double_transform(src, 1.0, 1e-12, 35.0);
    CHECK(v == doctest::Approx(1.0).epsilon(1e-6));
}

TEST_CASE("numeric transform truncation precondition") {
    const auto src = occupation_transform_source(kNet, 0.0, 10.0);
    CHECK_THROWS_AS(numeric_double_transform(src, 1.0, 1.0, 10.0), std::domain_error);
}

TEST_CASE("numeric matches closed: compound Poisson at zero capital") {
    const auto src = occupation_transform_source(kNet, 0.0, 30.0);
    const double num = numeric_double_transform(src, 1.0, 1.0, 30.0);
    CHECK(std::abs(num - closed_double_transform(kNet, 1.0, 1.0)) <= 1e-4);
}

TEST_CASE("numeric matches closed: brownian at zero capital") {
    const auto src = occupation_transform_source(kBm);
    const double num = numeric_double_transform(src, 1.0, 1.0, 30.0);
    CHECK(std::abs(num - closed_double_transform(kBm, 1.0, 1.0)) <= 1e-4);
}

TEST_CASE("numeric matches closed: compound Poisson with capital") {
    const auto src = occupation_transform_source(kNet, 1.0, 45.0);
    const double num = numeric_double_transform(src, 0.7, 1.3, 30.0 / 0.7);
    CHECK(std::abs(num - closed_double_transform(kNet, 1.0, 0.7, 1.3)) <= 1e-4);
    const auto src2 = occupation_transform_source(kNet, 2.0, 45.0);
    const double num2 = numeric_double_transform(src2, 0.7, 1.3, 30.0 / 0.7);
    CHECK(std::abs(num2 - closed_double_transform(kNet, 2.0, 0.7, 1.3)) <= 1e-4);
}

TEST_CASE("transform values lie in (0, 1/p]") {
    const auto src = occupation_transform_source(kNet, 0.5, 65.0);
    for (double p : {0.5, 2.0}) {
        for (double q : {0.5, 3.0}) {
            const double v = numeric_double_transform(src, p, q, 30.0 / p);
            CHECK(v > 0.0);
            CHECK(v <= 1.0 / p + 1e-12);
            CHECK(closed_double_transform(kNet, p, q) <= 1.0 / p);
        }
    }
}

TEST_CASE("survival transform identity") {
    for (double p : {0.5, 1.0, 2.0}) {
        const double closed = 1.0 / (kNet.c * lundberg_roots(kNet, p).phi);
        CHECK(std::abs(survival_transform(kNet, p) - closed) <= 1e-5);
    }
}
