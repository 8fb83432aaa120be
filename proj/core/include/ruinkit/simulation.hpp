#ifndef RUINKIT_SIMULATION_HPP
#define RUINKIT_SIMULATION_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "ruinkit/models.hpp"
#include "ruinkit/rng.hpp"

namespace ruinkit {

// Monte Carlo probability estimate with its binomial standard error.
struct Estimate {
    double value;
    double std_error;  // sqrt(p (1-p) / n)
    std::uint64_t n_paths;
    std::uint64_t seed;
    std::string name;
};

// Maximal interval strictly below zero; end is clipped to the horizon when
// the excursion is still running there.
struct Excursion {
    double start;
    double end;
};

// Exact piecewise-linear compound Poisson trajectory over [0, horizon].
// Between jumps the path rises at rate drift; jumps are strictly downward.
// Occupation time and the excursion decomposition come from the crossing
// algebra, with no time discretization.
struct PathSample {
    double x0 = 0.0;
    double drift = 0.0;
    double horizon = 0.0;
    std::vector<double> jump_times;
    std::vector<double> jump_sizes;
    std::vector<Excursion> excursions;
    double occupation_time = 0.0;
    double ruin_time = 0.0;  // +inf when the path never goes below zero

    bool ruined() const { return ruin_time <= horizon; }

    // level X(s) just after any jump at s
    double level_at(double s) const;

    // Derive the excursion decomposition from an event list.  jump times must
    // be strictly increasing inside (0, horizon].
    static PathSample from_events(double x0, double drift, double horizon,
                                  std::vector<double> times, std::vector<double> sizes);
};

// One exact trajectory; consumes one exponential gap per jump plus one claim
// size each, in event order.
PathSample simulate_path(const CramerLundbergParams& model, double x, double t, PathRng& rng);

// Ruin indicators evaluated on one path.  The exponential-clock variants draw
// from rng after the path events: first the single aggregate clock, then one
// clock per excursion in path order (stopping at the first trigger).
struct RuinIndicators {
    bool classical;              // tau_0^- <= t
    bool cumulative;             // occupation > r          (sigma_r <= t)
    bool parisian;               // some excursion age > r  (tau_r <= t)
    bool exp_aggregate;          // occupation > Exp(q)     (sigma_{e_q} <= t)
    bool exp_per_excursion;      // some excursion age > its own Exp(q) clock (kappa_q <= t)
    double occupation;
};

RuinIndicators evaluate_ruin(const PathSample& path, double r, double q, PathRng& rng);

// Coupled counts over n_paths independent trajectories; every indicator comes
// from the same path, so the pathwise ruin-time orderings
//   1{tau_r <= t} <= 1{sigma_r <= t} <= 1{tau_0^- <= t}
// can be audited exactly (ordering_violations counts offending paths).
struct CoupledRuinCounts {
    std::uint64_t n_paths = 0;
    std::uint64_t seed = 0;
    std::uint64_t classical = 0;
    std::uint64_t cumulative = 0;
    std::uint64_t parisian = 0;
    std::uint64_t exp_aggregate = 0;
    std::uint64_t exp_per_excursion = 0;
    std::uint64_t ordering_violations = 0;
    double occupation_sum = 0.0;
    double occupation_sq_sum = 0.0;

    Estimate estimate(std::uint64_t count, const std::string& name) const;
    double mean_occupation() const { return occupation_sum / static_cast<double>(n_paths); }
    double mean_occupation_std_error() const;
};

CoupledRuinCounts simulate_coupled(const CramerLundbergParams& model, double x, double r,
                                   double q, double t, std::uint64_t n_paths,
                                   std::uint64_t seed, int n_threads = 0);

// Single-quantity wrappers over simulate_coupled (identical streams).
Estimate estimate_classical_ruin(const CramerLundbergParams& model, double x, double t,
                                 std::uint64_t n_paths, std::uint64_t seed, int n_threads = 0);
Estimate estimate_cumulative_parisian(const CramerLundbergParams& model, double x, double r,
                                      double t, std::uint64_t n_paths, std::uint64_t seed,
                                      int n_threads = 0);
Estimate estimate_parisian(const CramerLundbergParams& model, double x, double r, double t,
                           std::uint64_t n_paths, std::uint64_t seed, int n_threads = 0);
Estimate estimate_exponential_parisian(const CramerLundbergParams& model, double x, double q,
                                       double t, std::uint64_t n_paths, std::uint64_t seed,
                                       int n_threads = 0);

// Empirical occupation-time law: exact-zero count plus uniform bins on (0, t].
struct OccupationHistogram {
    double horizon = 0.0;
    std::uint64_t n_paths = 0;
    std::uint64_t atom_count = 0;
    std::vector<std::uint64_t> counts;

    std::size_t n_bins() const { return counts.size(); }
    double edge(std::size_t i) const;            // i in [0, n_bins]
    double cdf_at_edge(std::size_t i) const;     // P(occupation <= edge(i))
    double cdf_std_error(std::size_t i) const;
};

OccupationHistogram simulate_cl_occupation(const CramerLundbergParams& model, double x, double t,
                                           std::uint64_t n_paths, std::uint64_t seed,
                                           std::size_t n_bins = 50, int n_threads = 0);

// Euler-grid Brownian simulation.  Occupation time is dt * #(grid points
// below zero), which carries an O(sqrt(dt)) bias that callers must budget for.
struct BmOccupationResult {
    OccupationHistogram histogram;
    Estimate classical;   // any grid point below zero
    Estimate cumulative;  // occupation > r
};

BmOccupationResult simulate_bm_occupation(const BrownianParams& model, double x, double t,
                                          double dt, std::uint64_t n_paths, std::uint64_t seed,
                                          double r, std::size_t n_bins = 50, int n_threads = 0);

}  // namespace ruinkit

#endif  // RUINKIT_SIMULATION_HPP
