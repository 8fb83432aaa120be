#include "ruinkit/brownian.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "ruinkit/curve.hpp"
#include "ruinkit/quadrature.hpp"
#include "ruinkit/special_functions.hpp"

namespace ruinkit {

namespace {

const double kInvSqrt2Pi = 1.0 / std::sqrt(2.0 * std::numbers::pi);

// left brace of the occupation density; ~ 1/sqrt(s) as s -> 0
double brace_from_zero(const BrownianParams& m, double s) {
    const double y = m.c * std::sqrt(s) / m.sigma;
    return (2.0 / (m.sigma * m.sigma)) *
           (m.sigma * std::exp(-0.5 * y * y) * kInvSqrt2Pi / std::sqrt(s) -
            m.c * normal_tail(y));
}

// right brace; ~ 1/sqrt(w) as w -> 0
double brace_to_horizon(const BrownianParams& m, double w) {
    const double y = m.c * std::sqrt(w) / m.sigma;
    return m.c + m.sigma * std::exp(-0.5 * y * y) * kInvSqrt2Pi / std::sqrt(w) -
           m.c * normal_tail(y);
}

// left brace with the substitution s = v^2 and the jacobian folded in:
// v * brace_from_zero(v^2), smooth at v = 0
double brace_from_zero_sub(const BrownianParams& m, double v) {
    const double y = m.c * v / m.sigma;
    return (2.0 / (m.sigma * m.sigma)) *
           (m.sigma * std::exp(-0.5 * y * y) * kInvSqrt2Pi - v * m.c * normal_tail(y));
}

// right brace with w = v^2 and jacobian: v * brace_to_horizon(v^2)
double brace_to_horizon_sub(const BrownianParams& m, double v) {
    const double y = m.c * v / m.sigma;
    return v * m.c + m.sigma * std::exp(-0.5 * y * y) * kInvSqrt2Pi -
           v * m.c * normal_tail(y);
}

// Int_0^s weight(u) * density(t, u) du for 0 <= s <= t, X_0 = 0, with both
// endpoint singularities removed by the v^2 substitution.  weight(u) must be
// smooth; it lets the same splitting serve the cdf (weight = 1) and the
// exponential transform (weight = e^{-qu}).
template <class W>
double weighted_occupation_mass(const BrownianParams& m, double t, double s, W&& weight,
                                const char* context) {
    if (s <= 0.0) return 0.0;
    const double hi = std::min(s, t);
    const double mid = std::min(hi, 0.5 * t);
    double total = 0.0;
    // u in (0, mid]:  u = v^2
    total += 2.0 * adaptive_integrate(
                       [&](double v) {
                           const double u = v * v;
                           return weight(u) * brace_from_zero_sub(m, v) *
                                  brace_to_horizon(m, t - u);
                       },
                       0.0, std::sqrt(mid), 1e-10, context);
    // u in (mid, hi]:  u = t - w^2
    if (hi > mid) {
        total += 2.0 * adaptive_integrate(
                           [&](double w) {
                               const double u = t - w * w;
                               return weight(u) * brace_from_zero(m, u) *
                                      brace_to_horizon_sub(m, w);
                           },
                           std::sqrt(t - hi), std::sqrt(t - mid), 1e-10, context);
    }
    return total;
}

}  // namespace

double occupation_density(const BrownianParams& model, double t, double s) {
    model.validate();
    if (!(t > 0.0)) throw std::domain_error("occupation_density: t must be > 0");
    if (!(s > 0.0 && s < t)) throw std::domain_error("occupation_density: need 0 < s < t");
    return brace_from_zero(model, s) * brace_to_horizon(model, t - s);
}

double occupation_cdf(const BrownianParams& model, double t, double s) {
    model.validate();
    if (!(t > 0.0)) throw std::domain_error("occupation_cdf: t must be > 0");
    if (s <= 0.0) return 0.0;
    if (s > t) return 1.0;
    // at s = t this is the computed total mass, the density normalization check
    const double mass = weighted_occupation_mass(model, t, s, [](double) { return 1.0; },
                                                 "brownian occupation cdf");
    return std::max(mass, 0.0);
}

double occupation_exp_transform(const BrownianParams& model, double t, double q) {
    model.validate();
    if (!(t > 0.0)) throw std::domain_error("occupation_exp_transform: t must be > 0");
    if (q < 0.0) throw std::domain_error("occupation_exp_transform: q must be >= 0");
    const double mass = weighted_occupation_mass(
        model, t, t, [q](double u) { return std::exp(-q * u); },
        "brownian occupation transform");
    return std::clamp(mass, 0.0, 1.0);
}

double ruin_time_density(const BrownianParams& model, double x, double u) {
    model.validate();
    if (!(x > 0.0)) throw std::domain_error("ruin_time_density: x must be > 0");
    if (!(u > 0.0)) throw std::domain_error("ruin_time_density: u must be > 0");
    const double s2 = model.sigma * model.sigma;
    // down-crossing against the drift: (x + c u), total mass e^{-2 c x / sigma^2}
    const double dev = x + model.c * u;
    const double exponent = -dev * dev / (2.0 * s2 * u);
    if (exponent < -745.0) return 0.0;
    return x / std::sqrt(2.0 * std::numbers::pi * s2 * u * u * u) * std::exp(exponent);
}

double ruin_probability(const BrownianParams& model, double x, double t) {
    model.validate();
    if (!(x > 0.0)) throw std::domain_error("ruin_probability: x must be > 0");
    if (!(t > 0.0)) throw std::domain_error("ruin_probability: t must be > 0");
    const double mass =
        adaptive_integrate([&](double u) { return u > 0.0 ? ruin_time_density(model, x, u) : 0.0; },
                           0.0, t, 1e-10, "brownian ruin probability");
    return std::clamp(mass, 0.0, 1.0);
}

double cumulative_parisian_probability(const BrownianParams& model, double x, double r,
                                       double t) {
    model.validate();
    if (x < 0.0) throw std::domain_error("cumulative_parisian_probability: x must be >= 0");
    if (!(r > 0.0)) throw std::domain_error("cumulative_parisian_probability: r must be > 0");
    if (!(t > 0.0)) throw std::domain_error("cumulative_parisian_probability: t must be > 0");
    if (r >= t) return 0.0;
    if (x == 0.0) return std::clamp(1.0 - occupation_cdf(model, t, r), 0.0, 1.0);

    // inner occupation tail as a function of the remaining horizon h in [r, t]
    constexpr std::size_t panels = 2048;
    const double dh = (t - r) / static_cast<double>(panels);
    std::vector<double> tail(panels + 1);
    tail[0] = 0.0;  // occupation over a horizon of exactly r cannot exceed r
    for (std::size_t i = 1; i <= panels; ++i) {
        const double h = r + dh * static_cast<double>(i);
        tail[i] = 1.0 - occupation_cdf(model, h, r);
    }
    const CubicCurve tail_curve(r, dh, std::move(tail));

    const double prob = adaptive_integrate(
        [&](double u) {
            return u > 0.0 ? tail_curve(t - u) * ruin_time_density(model, x, u) : 0.0;
        },
        0.0, t - r, 1e-9, "brownian cumulative parisian convolution");
    return std::clamp(prob, 0.0, 1.0);
}

}  // namespace ruinkit
