#ifndef RUINKIT_VALIDATION_HPP
#define RUINKIT_VALIDATION_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace ruinkit {

// Outcome of one named validation check.  observed is the worst deviation
// across the check's cases, measured against tolerance (checks built on
// Monte Carlo allowances normalize per-case, see detail).
struct CheckResult {
    std::string name;
    bool pass;
    double observed;
    double tolerance;
    double seconds;
    std::string detail;
};

struct ValidationOptions {
    std::uint64_t mc_paths = 1'000'000;     // exact-path and grid Monte Carlo budget
    std::uint64_t ordering_paths = 100'000; // pathwise-ordering audit budget
    std::uint64_t seed = 42;
    double bm_dt = 1e-4;                    // Brownian grid step
    int n_threads = 0;                      // 0 = hardware concurrency
    bool enforce_runtime = false;           // fail checks that blow their wall-clock budget
};

// Deterministic closed-form identities (survival at zero, ultimate survival,
// occupation normalization, special-function agreement).
std::vector<CheckResult> run_identity_suite(const ValidationOptions& opts);

// Transform-domain gate: forward numerical double transforms against the
// closed forms, plus the survival-transform identity.
std::vector<CheckResult> run_transform_suite(const ValidationOptions& opts);

// Monte Carlo oracle gates: exact compound Poisson paths, clock equivalence,
// the vanishing-allowance limit, the Brownian grid oracle, and the pathwise
// ruin-time orderings.
std::vector<CheckResult> run_oracle_suite(const ValidationOptions& opts);

std::vector<CheckResult> run_all_suites(const ValidationOptions& opts);

}  // namespace ruinkit

#endif  // RUINKIT_VALIDATION_HPP
