#ifndef RUINKIT_LAPLACE_HPP
#define RUINKIT_LAPLACE_HPP

#include <functional>

#include "ruinkit/models.hpp"

namespace ruinkit {

// Double transform under study:
//   Int_0^inf e^{-pt} E_x[ exp(-q * occupation(t)) ] dt,  p, q > 0.
// Values always lie in (0, 1/p].

// Closed form for zero initial capital, phi(p+q) / ((p+q) phi(p)).
// Requires the net profit condition.
double closed_double_transform(const CramerLundbergParams& model, double p, double q);
double closed_double_transform(const BrownianParams& model, double p, double q);

// Closed form for initial capital x >= 0 (compound Poisson model):
//   (alpha + theta_p) Phi_{p+q} / (c (Phi_{p+q} - theta_p))
//     * [ 1/(Phi_p theta_p) - 1/(Phi_{p+q} theta_{p+q}) ] e^{theta_p x}
//   - alpha / (c Phi_p theta_p).
double closed_double_transform(const CramerLundbergParams& model, double x, double p, double q);

// E_x[exp(-q occupation(t))] as a function of (t, q); the forward transforms
// below integrate these numerically.
using OccupationTransform = std::function<double(double t, double q)>;

// Curve-backed source for the compound Poisson model, valid for t <= t_max.
OccupationTransform occupation_transform_source(const CramerLundbergParams& model, double x,
                                                double t_max);
// Brownian source for zero initial capital.
OccupationTransform occupation_transform_source(const BrownianParams& model);

// Numerical forward double transform, truncated at t_max.  Requires
// p * t_max >= 30 so the truncation error is below every gate tolerance.
double numeric_double_transform(const OccupationTransform& source, double p, double q,
                                double t_max);

// Numerical transform of the zero-capital survival probability,
// Int_0^inf e^{-pt} a_t dt; equals 1 / (c phi(p)) in closed form.
double survival_transform(const CramerLundbergParams& model, double p);

}  // namespace ruinkit

#endif  // RUINKIT_LAPLACE_HPP
