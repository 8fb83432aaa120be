#ifndef RUINKIT_SPECIAL_FUNCTIONS_HPP
#define RUINKIT_SPECIAL_FUNCTIONS_HPP

namespace ruinkit {

// Modified Bessel function of the first kind, orders 0, 1, 2, s >= 0.
// Power series below s = 15, trigonometric integral form above; the two
// routes agree to ~1e-12 relative in the overlap band.
double bessel_i(int order, double s);

// exp(-s) * I_order(s); never overflows and is the form the occupation-time
// integrands consume (the surplus-model exponential absorbs the growth).
double bessel_i_scaled(int order, double s);

// Tail of the standard normal distribution, N̄(x) = P(Z > x).
double normal_tail(double x);

namespace detail {

// Both evaluation routes, exposed for cross-validation.
double bessel_i_series_scaled(int order, double s);
double bessel_i_integral_scaled(int order, double s);
double bessel_i_series(int order, double s);
double bessel_i_integral(int order, double s);

}  // namespace detail

}  // namespace ruinkit

#endif  // RUINKIT_SPECIAL_FUNCTIONS_HPP
