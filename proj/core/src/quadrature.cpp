#include "ruinkit/quadrature.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace ruinkit {

QuadratureRule QuadratureRule::chebyshev2(int n) {
    if (n < 1) throw std::domain_error("chebyshev2: need n >= 1");
    QuadratureRule rule;
    rule.kind = QuadKind::chebyshev2;
    rule.nodes.resize(n);
    rule.weights.resize(n);
    const double h = std::numbers::pi / (n + 1);
    for (int j = 1; j <= n; ++j) {
        const double phi = j * h;
        const double s = std::sin(phi);
        rule.nodes[j - 1] = std::cos(phi);
        rule.weights[j - 1] = h * s * s;
    }
    return rule;
}

QuadratureRule QuadratureRule::legendre(int n) {
    if (n < 1) throw std::domain_error("legendre: need n >= 1");
    QuadratureRule rule;
    rule.kind = QuadKind::legendre;
    rule.nodes.resize(n);
    rule.weights.resize(n);
    // Newton iteration on P_n, seeded with the Chebyshev angle estimate.
    const int m = (n + 1) / 2;
    for (int i = 0; i < m; ++i) {
        double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
        double pp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0, p1 = 0.0;
            for (int j = 0; j < n; ++j) {
                const double p2 = p1;
                p1 = p0;
                p0 = ((2.0 * j + 1.0) * x * p1 - j * p2) / (j + 1.0);
            }
            pp = n * (x * p0 - p1) / (x * x - 1.0);
            const double dx = p0 / pp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        rule.nodes[i] = -x;
        rule.nodes[n - 1 - i] = x;
        const double w = 2.0 / ((1.0 - x * x) * pp * pp);
        rule.weights[i] = w;
        rule.weights[n - 1 - i] = w;
    }
    return rule;
}

}  // namespace ruinkit
