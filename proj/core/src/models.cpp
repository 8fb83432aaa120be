#include "ruinkit/models.hpp"

#include <cmath>
#include <stdexcept>

namespace ruinkit {

void CramerLundbergParams::validate() const {
    if (!(c > 0.0) || !std::isfinite(c))
        throw std::invalid_argument("CramerLundbergParams: premium rate c must be > 0");
    if (!(lambda > 0.0) || !std::isfinite(lambda))
        throw std::invalid_argument("CramerLundbergParams: claim rate lambda must be > 0");
    if (!(alpha > 0.0) || !std::isfinite(alpha))
        throw std::invalid_argument("CramerLundbergParams: claim size rate alpha must be > 0");
}

void BrownianParams::validate() const {
    if (!(c > 0.0) || !std::isfinite(c))
        throw std::invalid_argument("BrownianParams: drift c must be > 0");
    if (!(sigma > 0.0) || !std::isfinite(sigma))
        throw std::invalid_argument("BrownianParams: volatility sigma must be > 0");
}

double laplace_exponent(const CramerLundbergParams& model, double theta) {
    model.validate();
    if (theta <= -model.alpha)
        throw std::domain_error("laplace_exponent: theta must be > -alpha");
    return model.c * theta - model.lambda * theta / (model.alpha + theta);
}

double laplace_exponent(const BrownianParams& model, double theta) {
    model.validate();
    return model.c * theta + 0.5 * model.sigma * model.sigma * theta * theta;
}

LundbergRoots lundberg_roots(const CramerLundbergParams& model, double p) {
    model.validate();
    if (p < 0.0 || !std::isfinite(p))
        throw std::domain_error("lundberg_roots: p must be >= 0");
    const double ca = model.c * model.alpha;
    const double b = p + model.lambda - ca;
    const double delta = b * b + 4.0 * ca * p;
    const double sq = std::sqrt(delta);
    double phi, theta;
    if (b >= 0.0) {
        // b + sq has no cancellation; recover theta from c phi theta = -alpha p
        phi = (b + sq) / (2.0 * model.c);
        theta = phi > 0.0 ? -model.alpha * p / (model.c * phi) : (b - sq) / (2.0 * model.c);
    } else {
        theta = (b - sq) / (2.0 * model.c);
        phi = theta < 0.0 ? -model.alpha * p / (model.c * theta) : (b + sq) / (2.0 * model.c);
    }
    return {phi, theta, delta};
}

double phi_root(const BrownianParams& model, double q) {
    model.validate();
    if (q < 0.0 || !std::isfinite(q))
        throw std::domain_error("phi_root: q must be >= 0");
    const double s2 = model.sigma * model.sigma;
    // conjugate form of (sqrt(c^2 + 2 sigma^2 q) - c) / sigma^2, exact at q = 0
    return 2.0 * q / (std::sqrt(model.c * model.c + 2.0 * s2 * q) + model.c);
}

double phi_root(const CramerLundbergParams& model, double p) {
    return lundberg_roots(model, p).phi;
}

}  // namespace ruinkit
