#include "ruinkit/laplace.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <stdexcept>

#include "ruinkit/brownian.hpp"
#include "ruinkit/cramer_lundberg.hpp"
#include "ruinkit/quadrature.hpp"

namespace ruinkit {

namespace {

void check_pq(double p, double q) {
    if (!(p > 0.0) || !(q > 0.0))
        throw std::domain_error("double transform: p and q must be > 0");
}

template <class Model>
void check_net_profit(const Model& model) {
    model.validate();
    if (!model.net_profit())
        throw std::domain_error("double transform: net profit condition required");
}

// Int_0^{t_max} e^{-pt} f(t) dt over geometrically growing panels, each
// integrated adaptively.
template <class F>
double exp_weighted_integral(F&& f, double p, double t_max, const char* context) {
    double total = 0.0;
    double lo = 0.0;
    double hi = 1.0 / p;
    while (lo < t_max) {
        hi = std::min(hi, t_max);
        total += adaptive_integrate([&](double t) { return std::exp(-p * t) * f(t); }, lo, hi,
                                    1e-9, context);
        lo = hi;
        hi *= 2.0;
    }
    return total;
}

}  // namespace

double closed_double_transform(const CramerLundbergParams& model, double p, double q) {
    check_net_profit(model);
    check_pq(p, q);
    const double phi_p = lundberg_roots(model, p).phi;
    const double phi_pq = lundberg_roots(model, p + q).phi;
    return phi_pq / ((p + q) * phi_p);
}

double closed_double_transform(const BrownianParams& model, double p, double q) {
    check_net_profit(model);
    check_pq(p, q);
    return phi_root(model, p + q) / ((p + q) * phi_root(model, p));
}

double closed_double_transform(const CramerLundbergParams& model, double x, double p, double q) {
    check_net_profit(model);
    check_pq(p, q);
    if (x < 0.0) throw std::domain_error("double transform: x must be >= 0");
    const LundbergRoots rp = lundberg_roots(model, p);
    const LundbergRoots rpq = lundberg_roots(model, p + q);
    const double front = (model.alpha + rp.theta) * rpq.phi /
                         (model.c * (rpq.phi - rp.theta));
    const double bracket =
        1.0 / (rp.phi * rp.theta) - 1.0 / (rpq.phi * rpq.theta);
    return front * bracket * std::exp(rp.theta * x) -
           model.alpha / (model.c * rp.phi * rp.theta);
}

OccupationTransform occupation_transform_source(const CramerLundbergParams& model, double x,
                                                double t_max) {
    if (!(t_max > 0.0)) throw std::domain_error("occupation_transform_source: t_max must be > 0");
    // grid fine enough that interpolation error stays below the 1e-4 gates
    const auto panels = static_cast<std::size_t>(
        std::clamp(t_max / 0.01, 2048.0, 16384.0));
    auto law = std::make_shared<OccupationLaw>(model, x, t_max, panels);
    return [law](double t, double q) {
        if (t <= 0.0) return 1.0;
        return law->occupation_laplace(std::min(t, law->horizon()), q);
    };
}

OccupationTransform occupation_transform_source(const BrownianParams& model) {
    model.validate();
    return [model](double t, double q) {
        return t <= 0.0 ? 1.0 : occupation_exp_transform(model, t, q);
    };
}

double numeric_double_transform(const OccupationTransform& source, double p, double q,
                                double t_max) {
    check_pq(p, q);
    if (!(p * t_max >= 30.0))
        throw std::domain_error("numeric_double_transform: need p * t_max >= 30");
    return exp_weighted_integral([&](double t) { return source(t, q); }, p, t_max,
                                 "numeric double transform");
}

double survival_transform(const CramerLundbergParams& model, double p) {
    model.validate();
    if (!(p > 0.0)) throw std::domain_error("survival_transform: p must be > 0");
    const double t_max = 30.0 / p;
    const double body = exp_weighted_integral(
        [&](double t) { return survival_probability(model, t); }, p, t_max,
        "survival transform");
    // analytic tail: a_t has settled to its limit well before t_max
    const double limit = std::max(0.0, 1.0 - model.lambda / (model.c * model.alpha));
    return body + limit * std::exp(-p * t_max) / p;
}

}  // namespace ruinkit
