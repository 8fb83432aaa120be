#ifndef RUINKIT_BROWNIAN_HPP
#define RUINKIT_BROWNIAN_HPP

#include "ruinkit/models.hpp"

namespace ruinkit {

// Density of the time spent below zero over [0, t] when X_0 = 0, at s in (0, t):
//   (2/sigma^2) { sigma e^{-(c^2/2 sigma^2) s} / sqrt(2 pi s) - c N̄(c sqrt(s)/sigma) }
//            x { c + sigma e^{-(c^2/2 sigma^2)(t-s)} / sqrt(2 pi (t-s)) - c N̄(c sqrt(t-s)/sigma) }.
// Both factors blow up like an inverse square root at their endpoint; the cdf
// integrates them with the substitution s = v^2 on each endpoint panel.
double occupation_density(const BrownianParams& model, double t, double s);

// P(occupation(t) <= s) for X_0 = 0; zero at s <= 0 and one beyond t.  At
// s = t the computed total mass is returned rather than the exact constant,
// so callers can audit the density normalization.
double occupation_cdf(const BrownianParams& model, double t, double s);

// E[ exp(-q * occupation(t)) ] for X_0 = 0.
double occupation_exp_transform(const BrownianParams& model, double t, double q);

// First-passage density of the ruin time from x > 0:
//   x / sqrt(2 pi sigma^2 u^3) exp( -(x - c u)^2 / (2 sigma^2 u) ).
// Integrates to exp(-2 c x / sigma^2) over (0, inf).
double ruin_time_density(const BrownianParams& model, double x, double u);

// P_x(tau_0^- <= t), by numerical integration of the first-passage density.
double ruin_probability(const BrownianParams& model, double x, double t);

// P_x(cumulative time below zero exceeds r before t).  Zero when r >= t; for
// x > 0 this is the first-passage convolution
//   Int_0^{t-r} P(occupation(t-u) > r) ruin_time_density(x, u) du,
// with the inner tail precomputed on a grid in the horizon and interpolated.
double cumulative_parisian_probability(const BrownianParams& model, double x, double r,
                                       double t);

}  // namespace ruinkit

#endif  // RUINKIT_BROWNIAN_HPP
