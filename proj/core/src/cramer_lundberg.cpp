#include "ruinkit/cramer_lundberg.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "ruinkit/quadrature.hpp"
#include "ruinkit/special_functions.hpp"

namespace ruinkit {

namespace {

constexpr long kMaxChebyshevNodes = 1L << 26;

// The a_t integrand develops a boundary layer of angular width ~1/sqrt(k t)
// at u = -1; start the doubling sequence at a resolution that already sees it.
long initial_chebyshev_nodes(double kt) {
    const double need = 4.0 * std::sqrt(std::max(kt, 1.0));
    long n = 64;
    while (static_cast<double>(n) < need && n < kMaxChebyshevNodes) n <<= 1;
    return n;
}

struct BesselPair {
    double i0;  // exp(-z) I_0(z)
    double i2;  // exp(-z) I_2(z)
};

BesselPair scaled_i0_i2(double z) {
    return {bessel_i_scaled(0, z), bessel_i_scaled(2, z)};
}

// shared pieces of the positive-capital integrands for one (model, x)
struct XIntegrands {
    double c, lambda, alpha;
    double x;
    double beta;  // lambda + c alpha
    double k;     // 2 sqrt(c alpha lambda)
    double x_over_c;

    explicit XIntegrands(const CramerLundbergParams& m, double x_init)
        : c(m.c),
          lambda(m.lambda),
          alpha(m.alpha),
          x(x_init),
          beta(m.lambda + m.c * m.alpha),
          k(2.0 * std::sqrt(m.c * m.alpha * m.lambda)),
          x_over_c(x_init / m.c) {}

    double z_at(double s) const { return k * std::sqrt(s * (s + x_over_c)); }

    // ruin-time density without the lambda e^{-alpha x} prefactor
    double ruin_kernel(double s) const {
        const double z = z_at(s);
        const BesselPair b = scaled_i0_i2(z);
        const double ratio = x == 0.0 ? 1.0 : s / (s + x_over_c);
        return std::exp(z - beta * s) * (b.i0 - ratio * b.i2);
    }

    // correction integrand without the x alpha lambda e^{-alpha x} prefactor
    double correction_kernel(double s) const {
        const double z = z_at(s);
        const BesselPair b = scaled_i0_i2(z);
        return std::exp(z - beta * s) * (b.i0 - b.i2);
    }
};

// n-node Gauss-Chebyshev (second kind) sum of the survival integrand
//   sqrt(1-u^2) exp(-(beta + k u) t) / (beta + k u).
// Evaluated in angle space with half-angle forms: near criticality
// (lambda ~ c alpha) both sin^2(phi) and beta + k u vanish like (pi - phi)^2
// at the u = -1 end, and the naive forms lose all relative precision there.
// With d = 1 + u = 2 cos^2(phi/2) and gap = (sqrt(lambda) - sqrt(c alpha))^2
// every factor is computed from exact small quantities.
double survival_chebyshev_sum(double gap, double k, double t, long n) {
    const double h = std::numbers::pi / static_cast<double>(n + 1);
    double acc = 0.0, comp = 0.0;
    // psi measures the node angle from the u = -1 end, where the boundary
    // layer sits; i * h keeps it relatively accurate there, so the exponent
    // k t d is good to ~4 ulp and node doubling can settle at 1e-12
    for (long i = 1; i <= n; ++i) {
        const double psi = static_cast<double>(i) * h;
        const double s2 = std::sin(0.5 * psi);
        const double c2 = std::cos(0.5 * psi);
        const double d = 2.0 * s2 * s2;  // 1 + cos(phi), phi = pi - psi
        const double sin2 = 4.0 * s2 * s2 * c2 * c2;
        const double denom = gap + k * d;
        const double term = sin2 * std::exp(-(gap + k * d) * t) / denom - comp;
        const double next = acc + term;
        comp = (next - acc) - term;
        acc = next;
    }
    // At exact criticality the weighted integrand tends to 2/k at psi = 0
    // instead of vanishing, and the open rule would converge only at O(1/n);
    // the closing trapezoid endpoint term restores spectral accuracy (the
    // integrand is even about both endpoints, so Euler-Maclaurin terms cancel).
    if (gap == 0.0) acc += 1.0 / k;
    return acc * h;
}

}  // namespace

double survival_probability(const CramerLundbergParams& model, double t) {
    model.validate();
    if (t < 0.0 || !std::isfinite(t))
        throw std::domain_error("survival_probability: t must be >= 0");
    const double ca = model.c * model.alpha;
    const double k = 2.0 * std::sqrt(ca * model.lambda);
    const double root_diff = std::sqrt(model.lambda) - std::sqrt(ca);
    const double gap = root_diff * root_diff;  // beta - k, computed without cancellation
    const double limit = std::max(0.0, 1.0 - model.lambda / ca);

    long n = initial_chebyshev_nodes(k * t);
    double prev = survival_chebyshev_sum(gap, k, t, n);
    for (;;) {
        if (2 * n > kMaxChebyshevNodes)
            throw QuadratureError("survival_probability chebyshev evaluation",
                                  limit + 2.0 * model.lambda / std::numbers::pi * prev);
        n *= 2;
        const double cur = survival_chebyshev_sum(gap, k, t, n);
        const bool converged = std::abs(cur - prev) <= 1e-12 * std::abs(cur) + 1e-300;
        prev = cur;
        if (converged) break;
    }
    const double a = limit + 2.0 * model.lambda / std::numbers::pi * prev;
    return std::clamp(a, 0.0, 1.0);
}

double ruin_time_density(const CramerLundbergParams& model, double x, double s) {
    model.validate();
    if (x < 0.0) throw std::domain_error("ruin_time_density: x must be >= 0");
    if (s < 0.0) throw std::domain_error("ruin_time_density: s must be >= 0");
    const XIntegrands f(model, x);
    return model.lambda * std::exp(-model.alpha * x) * f.ruin_kernel(s);
}

double survival_probability(const CramerLundbergParams& model, double x, double t) {
    model.validate();
    if (x < 0.0) throw std::domain_error("survival_probability: x must be >= 0");
    if (t < 0.0 || !std::isfinite(t))
        throw std::domain_error("survival_probability: t must be >= 0");
    if (t == 0.0) return 1.0;
    const XIntegrands f(model, x);
    const double mass =
        model.lambda * std::exp(-model.alpha * x) *
        adaptive_integrate([&](double s) { return f.ruin_kernel(s); }, 0.0, t, 1e-11,
                           "survival_probability ruin-time integral");
    return std::clamp(1.0 - mass, 0.0, 1.0);
}

double ruin_probability(const CramerLundbergParams& model, double x, double t) {
    return 1.0 - survival_probability(model, x, t);
}

double occupation_density(const CramerLundbergParams& model, double t, double s) {
    model.validate();
    if (!(t > 0.0)) throw std::domain_error("occupation_density: t must be > 0");
    if (!(s > 0.0 && s < t)) throw std::domain_error("occupation_density: need 0 < s < t");
    const double ca = model.c * model.alpha;
    const double a_ts = survival_probability(model, t - s);
    const double a_s = survival_probability(model, s);
    return a_ts * (model.lambda - ca * (1.0 - a_s));
}

double occupation_weight_correction(const CramerLundbergParams& model, double x, double t) {
    model.validate();
    if (x < 0.0) throw std::domain_error("occupation_weight_correction: x must be >= 0");
    if (t < 0.0) throw std::domain_error("occupation_weight_correction: t must be >= 0");
    if (x == 0.0) return 0.0;
    const double base = std::expm1(-model.alpha * x);
    if (t == 0.0) return base;
    const XIntegrands f(model, x);
    const double integral =
        adaptive_integrate([&](double s) { return f.correction_kernel(s); }, 0.0, t, 1e-11,
                           "occupation_weight_correction integral");
    return base + x * model.alpha * model.lambda * std::exp(-model.alpha * x) * integral;
}

OccupationLaw::OccupationLaw(const CramerLundbergParams& model, double x, double horizon,
                             std::size_t grid_panels)
    : model_(model), x_(x), horizon_(horizon) {
    model.validate();
    if (x < 0.0) throw std::domain_error("OccupationLaw: x must be >= 0");
    if (!(horizon > 0.0) || !std::isfinite(horizon))
        throw std::domain_error("OccupationLaw: horizon must be > 0");
    if (grid_panels < 16) grid_panels = 16;

    const std::size_t n = grid_panels + 1;
    const double dt = horizon / static_cast<double>(grid_panels);

    std::vector<double> a0(n);
    for (std::size_t i = 0; i < n; ++i)
        a0[i] = survival_probability(model, dt * static_cast<double>(i));

    // cumulative quadrature of the two smooth kernels, 5-point Gauss per panel
    static const double gl_x[5] = {-0.906179845938664, -0.538469310105683, 0.0,
                                   0.538469310105683, 0.906179845938664};
    static const double gl_w[5] = {0.236926885056189, 0.478628670499366, 0.568888888888889,
                                   0.478628670499366, 0.236926885056189};

    const XIntegrands f(model, x);
    std::vector<double> ax(n), kx(n);
    const double ruin_pref = model.lambda * std::exp(-model.alpha * x);
    const double corr_pref = x * model.alpha * model.lambda * std::exp(-model.alpha * x);
    const double corr_base = x == 0.0 ? 0.0 : std::expm1(-model.alpha * x);

    double ruin_mass = 0.0, corr_mass = 0.0;
    ax[0] = 1.0;
    kx[0] = corr_base;
    for (std::size_t i = 1; i < n; ++i) {
        const double lo = dt * static_cast<double>(i - 1);
        double pr = 0.0, pc = 0.0;
        for (int j = 0; j < 5; ++j) {
            const double s = lo + 0.5 * dt * (1.0 + gl_x[j]);
            pr += gl_w[j] * f.ruin_kernel(s);
            if (x > 0.0) pc += gl_w[j] * f.correction_kernel(s);
        }
        ruin_mass += 0.5 * dt * pr;
        corr_mass += 0.5 * dt * pc;
        ax[i] = std::clamp(1.0 - ruin_pref * ruin_mass, 0.0, 1.0);
        kx[i] = corr_base + corr_pref * corr_mass;
    }

    atom_ = ax.back();
    a0_ = CubicCurve(0.0, dt, std::move(a0));
    ax_ = CubicCurve(0.0, dt, std::move(ax));
    kx_ = CubicCurve(0.0, dt, std::move(kx));
}

double OccupationLaw::density(double s) const {
    if (!(s > 0.0 && s < horizon_))
        throw std::domain_error("OccupationLaw::density: need 0 < s < horizon");
    const double ca = model_.c * model_.alpha;
    return (ax_(horizon_ - s) + kx_(horizon_ - s)) * (model_.lambda - ca * (1.0 - a0_(s)));
}

double OccupationLaw::cdf(double s) const {
    if (s < 0.0) return 0.0;
    const double hi = std::min(s, horizon_);
    if (hi <= 0.0) return atom_;
    const double mass = adaptive_integrate([this](double u) { return density(u); },
                                           0.0, hi * (1.0 - 1e-15), 1e-10, "occupation cdf");
    return atom_ + mass;
}

double OccupationLaw::occupation_laplace(double t, double q) const {
    if (!(t > 0.0 && t <= horizon_ * (1.0 + 1e-12)))
        throw std::domain_error("occupation_laplace: t must lie in (0, horizon]");
    if (q < 0.0) throw std::domain_error("occupation_laplace: q must be >= 0");
    const double tt = std::min(t, horizon_);
    const double ca = model_.c * model_.alpha;
    const auto integrand = [&](double s) {
        return std::exp(-q * s) * (ax_(tt - s) + kx_(tt - s)) *
               (model_.lambda - ca * (1.0 - a0_(s)));
    };
    const double mass =
        adaptive_integrate(integrand, 0.0, tt * (1.0 - 1e-15), 1e-10, "occupation laplace");
    return ax_(tt) + mass;
}

OccupationDistribution occupation_distribution(const CramerLundbergParams& model, double x,
                                               double t, std::size_t n_grid) {
    if (!(t > 0.0)) throw std::domain_error("occupation_distribution: t must be > 0");
    if (n_grid < 2) n_grid = 2;
    const OccupationLaw law(model, x, t);

    OccupationDistribution dist;
    dist.horizon = t;
    dist.atom_at_zero = law.atom();
    dist.grid.reserve(n_grid - 1);
    dist.density.reserve(n_grid - 1);
    for (std::size_t i = 1; i < n_grid; ++i) {
        const double s = t * static_cast<double>(i) / static_cast<double>(n_grid);
        const double d = law.density(s);
        if (d < -1e-10)
            throw std::runtime_error("occupation_distribution: negative density value");
        dist.grid.push_back(s);
        dist.density.push_back(std::max(d, 0.0));
    }

    const double total = law.cdf(t);
    if (std::abs(total - 1.0) > 1e-4)
        throw std::runtime_error("occupation_distribution: atom + density mass deviates from 1");
    return dist;
}

double cumulative_parisian_probability(const CramerLundbergParams& model, double x, double r,
                                       double t) {
    model.validate();
    if (x < 0.0) throw std::domain_error("cumulative_parisian_probability: x must be >= 0");
    if (!(r > 0.0)) throw std::domain_error("cumulative_parisian_probability: r must be > 0");
    if (!(t > 0.0)) throw std::domain_error("cumulative_parisian_probability: t must be > 0");
    if (r >= t) return 0.0;
    const OccupationLaw law(model, x, t);
    return std::clamp(1.0 - law.cdf(r), 0.0, 1.0);
}

double exponential_parisian_probability(const CramerLundbergParams& model, double x, double q,
                                        double t) {
    model.validate();
    if (x < 0.0) throw std::domain_error("exponential_parisian_probability: x must be >= 0");
    if (!(q > 0.0)) throw std::domain_error("exponential_parisian_probability: q must be > 0");
    if (!(t > 0.0)) throw std::domain_error("exponential_parisian_probability: t must be > 0");
    const OccupationLaw law(model, x, t);
    return std::clamp(1.0 - law.occupation_laplace(q), 0.0, 1.0);
}

}  // namespace ruinkit
