#ifndef RUINKIT_MODELS_HPP
#define RUINKIT_MODELS_HPP

namespace ruinkit {

// Compound Poisson surplus with drift: X_t = x + c t - sum of exp(alpha) claims
// arriving at Poisson rate lambda.
struct CramerLundbergParams {
    double c;       // premium income per unit time
    double lambda;  // claim arrival rate
    double alpha;   // claim size rate (mean claim 1/alpha)

    // E[X_1] = c - lambda / alpha
    double mean_drift() const { return c - lambda / alpha; }

    // premiums exceed expected claims per unit time
    bool net_profit() const { return c * alpha > lambda; }

    void validate() const;  // throws std::invalid_argument on nonpositive fields
};

// Diffusion surplus: X_t = x + c t + sigma B_t.
struct BrownianParams {
    double c;      // drift per unit time
    double sigma;  // volatility

    double mean_drift() const { return c; }
    bool net_profit() const { return c > 0.0; }

    void validate() const;
};

// Roots of psi(theta) = p for the compound Poisson model.
// phi >= 0 is the largest root, theta <= 0 the smallest,
// delta the discriminant (p + lambda - c alpha)^2 + 4 c alpha p.
struct LundbergRoots {
    double phi;
    double theta;
    double delta;
};

// Laplace exponent psi(theta) = ln E[exp(theta X_1)].
// The compound Poisson variant has a pole at theta = -alpha and is only
// defined for theta > -alpha.
double laplace_exponent(const CramerLundbergParams& model, double theta);
double laplace_exponent(const BrownianParams& model, double theta);

// Both roots of psi(theta) = p, p >= 0.  Computed from the quadratic formula
// with the conjugate (product-identity) form on the cancellation-prone side,
// so c * phi * theta = -alpha * p holds to full precision.
LundbergRoots lundberg_roots(const CramerLundbergParams& model, double p);

// Right inverse of the Laplace exponent: the unique q-root phi(q) >= 0.
double phi_root(const BrownianParams& model, double q);
double phi_root(const CramerLundbergParams& model, double p);

}  // namespace ruinkit

#endif  // RUINKIT_MODELS_HPP
