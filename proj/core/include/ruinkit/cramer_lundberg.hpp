#ifndef RUINKIT_CRAMER_LUNDBERG_HPP
#define RUINKIT_CRAMER_LUNDBERG_HPP

#include <cstddef>

#include "ruinkit/curve.hpp"
#include "ruinkit/models.hpp"
#include "ruinkit/occupation_distribution.hpp"

namespace ruinkit {

// Survival probability P(tau_0^- > t) for zero initial capital,
//   a_t = (1 - lambda/(c alpha))_+
//       + (2 lambda / pi) Int_{-1}^{1} sqrt(1-u^2)
//            exp(-(lambda + c alpha + 2 sqrt(c alpha lambda) u) t)
//            / (lambda + c alpha + 2 sqrt(c alpha lambda) u) du,
// evaluated by the Gauss-Chebyshev (second kind) rule with node doubling
// until two resolutions agree to 1e-12 relative.
double survival_probability(const CramerLundbergParams& model, double t);

// Survival probability P_x(tau_0^- > t) for initial capital x >= 0,
//   a^x_t = 1 - Int_0^t ruin_time_density(model, x, s) ds.
double survival_probability(const CramerLundbergParams& model, double x, double t);

// Finite-time ruin probability P_x(tau_0^- <= t) = 1 - a^x_t.
double ruin_probability(const CramerLundbergParams& model, double x, double t);

// Density of the ruin time under P_x,
//   lambda e^{-alpha x} e^{-(lambda+c alpha)s}
//     [ I_0(z(s)) - s/(s + x/c) I_2(z(s)) ],   z(s) = 2 sqrt(c alpha lambda s (s + x/c)).
double ruin_time_density(const CramerLundbergParams& model, double x, double s);

// Occupation density for zero initial capital on 0 < s < t:
//   a_{t-s} (lambda - c alpha (1 - a_s)).
double occupation_density(const CramerLundbergParams& model, double t, double s);

// Start-level correction k^x_t entering the x > 0 occupation density as the
// weight a^x_{t-s} + k^x_{t-s}.  k^0_t = 0 and k^x_0 = e^{-alpha x} - 1;
//   k^x_t = e^{-alpha x} - 1
//         + x alpha lambda e^{-alpha x} Int_0^t e^{-(lambda+c alpha)s}
//              [ I_0(z(s)) - I_2(z(s)) ] ds.
double occupation_weight_correction(const CramerLundbergParams& model, double x, double t);

// Precomputed occupation-time law for one (model, x, horizon) triple.
// The three time curves (a^0, a^x, k^x) are built once on a uniform grid by
// cumulative quadrature of their smooth integrands and then interpolated with
// a shape-preserving cubic, so density, cdf, and transform evaluations are
// cheap.  Immutable after construction.
class OccupationLaw {
public:
    OccupationLaw(const CramerLundbergParams& model, double x, double horizon,
                  std::size_t grid_panels = 2048);

    // mass at zero occupation, a^x_horizon
    double atom() const { return atom_; }

    // occupation density at s in (0, horizon)
    double density(double s) const;

    // P_x(occupation <= s), including the atom
    double cdf(double s) const;

    // E_x[ exp(-q * occupation up to time t) ] for any t <= horizon
    double occupation_laplace(double t, double q) const;
    double occupation_laplace(double q) const { return occupation_laplace(horizon_, q); }

    double horizon() const { return horizon_; }
    double initial_capital() const { return x_; }
    const CramerLundbergParams& model() const { return model_; }

    // curve accessors (time argument in [0, horizon])
    double survival_at(double u) const { return ax_(u); }
    double correction_at(double u) const { return kx_(u); }
    double base_survival_at(double u) const { return a0_(u); }
    const CubicCurve& survival_curve() const { return ax_; }
    const CubicCurve& correction_curve() const { return kx_; }
    const CubicCurve& base_survival_curve() const { return a0_; }

private:
    CramerLundbergParams model_;
    double x_;
    double horizon_;
    double atom_;
    CubicCurve a0_;
    CubicCurve ax_;
    CubicCurve kx_;
};

// Snapshot of the law on an n_grid-point grid.  Checks the normalization
// |atom + mass - 1| and throws std::runtime_error beyond 1e-4.
OccupationDistribution occupation_distribution(const CramerLundbergParams& model, double x,
                                               double t, std::size_t n_grid = 1024);

// P_x(cumulative time below zero exceeds r before the horizon t)
//   = 1 - P_x(occupation(t) <= r);  zero when r >= t.
double cumulative_parisian_probability(const CramerLundbergParams& model, double x, double r,
                                       double t);

// P_x(some excursion below zero outlives its own exp(q) clock before t)
//   = 1 - E_x[ exp(-q * occupation(t)) ].
double exponential_parisian_probability(const CramerLundbergParams& model, double x, double q,
                                        double t);

}  // namespace ruinkit

#endif  // RUINKIT_CRAMER_LUNDBERG_HPP
