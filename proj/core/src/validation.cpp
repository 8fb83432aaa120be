#include "ruinkit/validation.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <sstream>

#include "ruinkit/brownian.hpp"
#include "ruinkit/cramer_lundberg.hpp"
#include "ruinkit/laplace.hpp"
#include "ruinkit/models.hpp"
#include "ruinkit/rng.hpp"
#include "ruinkit/simulation.hpp"
#include "ruinkit/special_functions.hpp"

namespace ruinkit {

namespace {

class Timer {
public:
    Timer() : start_(std::chrono::steady_clock::now()) {}
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    }

private:
    std::chrono::steady_clock::time_point start_;
};

// Accumulates per-case deviations of one check and renders the CheckResult.
class Check {
public:
    Check(std::string name, double tolerance, double runtime_budget = 0.0)
        : name_(std::move(name)), tolerance_(tolerance), runtime_budget_(runtime_budget) {}

    void record(double deviation, const std::string& what) {
        if (deviation > worst_) {
            worst_ = deviation;
            worst_detail_ = what;
        }
        if (!(deviation <= tolerance_)) {
            pass_ = false;
            if (!failures_.empty()) failures_ += "; ";
            std::ostringstream os;
            os << what << " deviates " << deviation << " > " << tolerance_;
            failures_ += os.str();
        }
    }

    void require(bool ok, const std::string& what) {
        if (!ok) {
            pass_ = false;
            if (!failures_.empty()) failures_ += "; ";
            failures_ += what;
        }
    }

    CheckResult finish(const Timer& timer, bool enforce_runtime) {
        double secs = timer.seconds();
        if (enforce_runtime && runtime_budget_ > 0.0 && secs > runtime_budget_) {
            pass_ = false;
            std::ostringstream os;
            os << "runtime " << secs << " s exceeds budget " << runtime_budget_ << " s";
            if (!failures_.empty()) failures_ += "; ";
            failures_ += os.str();
        }
        std::string detail = pass_ ? "worst: " + worst_detail_ : failures_;
        return {name_, pass_, worst_, tolerance_, secs, detail};
    }

private:
    std::string name_;
    double tolerance_;
    double runtime_budget_;
    double worst_ = 0.0;
    std::string worst_detail_ = "none";
    bool pass_ = true;
    std::string failures_;
};

std::string fmt(const char* label, double v) {
    std::ostringstream os;
    os << label << "=" << v;
    return os.str();
}

// ---- identity suite -------------------------------------------------------

CheckResult check_exact_at_zero(const ValidationOptions& opts) {
    Timer timer;
    Check check("exact-at-zero", 1e-10, 1.0);
    PathRng rng(777, 0);
    auto log_uniform = [&rng]() { return 0.2 * std::exp(rng.uniform() * std::log(25.0)); };
    for (int i = 0; i < 20; ++i) {
        const CramerLundbergParams m{log_uniform(), log_uniform(), log_uniform()};
        const double dev = std::abs(survival_probability(m, 0.0) - 1.0);
        std::ostringstream os;
        os << "(c=" << m.c << ", lambda=" << m.lambda << ", alpha=" << m.alpha << ")";
        check.record(dev, os.str());
    }
    return check.finish(timer, opts.enforce_runtime);
}

CheckResult check_ultimate_survival(const ValidationOptions& opts) {
    Timer timer;
    Check check("ultimate-survival", 1e-6, 10.0);
    // lambda / (c alpha) in {0.25, 0.5, 0.9, 1.0, 1.5}; the two near-critical
    // ratios need large c alpha for the t = 200 transient to clear 1e-6
    const CramerLundbergParams cases[] = {
        {2.0, 0.5, 1.0},      // 0.25
        {2.0, 1.0, 1.0},      // 0.5
        {20.0, 18.0, 1.0},    // 0.9
        {1e10, 1e10, 1.0},    // 1.0 (critical; survival ~ (pi lambda t)^{-1/2})
        {4.0, 6.0, 1.0},      // 1.5
    };
    for (const auto& m : cases) {
        const double ratio = m.lambda / (m.c * m.alpha);
        const double limit = std::max(0.0, 1.0 - ratio);
        const double dev = std::abs(survival_probability(m, 200.0) - limit);
        check.record(dev, fmt("ratio", ratio));
    }
    return check.finish(timer, opts.enforce_runtime);
}

CheckResult check_normalization(const ValidationOptions& opts) {
    Timer timer;
    Check check("occupation-normalization", 1e-6, 120.0);
    const CramerLundbergParams cl_cases[] = {{2.0, 1.0, 1.0}, {1.0, 2.0, 1.0}, {1.0, 1.0, 2.0}};
    for (const auto& m : cl_cases) {
        for (double x : {0.0, 0.5, 2.0}) {
            for (double t : {0.5, 1.0, 5.0}) {
                const OccupationLaw law(m, x, t);
                const double dev = std::abs(law.cdf(t) - 1.0);
                std::ostringstream os;
                os << "cl(c=" << m.c << ",lambda=" << m.lambda << ",alpha=" << m.alpha
                   << ",x=" << x << ",t=" << t << ")";
                check.record(dev, os.str());
            }
        }
    }
    const BrownianParams bm_cases[] = {{1.0, 1.0}, {0.5, 2.0}};
    for (const auto& m : bm_cases) {
        for (double t : {0.5, 1.0, 5.0}) {
            const double dev = std::abs(occupation_cdf(m, t, t) - 1.0);
            std::ostringstream os;
            os << "bm(c=" << m.c << ",sigma=" << m.sigma << ",t=" << t << ")";
            check.record(dev, os.str());
        }
    }
    return check.finish(timer, opts.enforce_runtime);
}

CheckResult check_special_functions(const ValidationOptions& opts) {
    Timer timer;
    Check check("special-function-gate", 1e-10, 0.0);
    for (int i = 0; i < 25; ++i) {
        const double s =
            1e-3 * std::pow(50.0 / 1e-3, static_cast<double>(i) / 24.0);
        for (int order = 0; order <= 2; ++order) {
            const double a = detail::bessel_i_series_scaled(order, s);
            const double b = detail::bessel_i_integral_scaled(order, s);
            const double rel = std::abs(a - b) / std::max(std::abs(a), 1e-300);
            check.record(rel, fmt("series-vs-integral s", s));
        }
        const double i0 = bessel_i(0, s);
        const double i1 = bessel_i(1, s);
        const double i2 = bessel_i(2, s);
        const double rec = std::abs(i1 - 0.5 * s * (i0 - i2)) / i1;
        check.record(rec, fmt("recurrence s", s));
    }
    return check.finish(timer, opts.enforce_runtime);
}

// ---- transform suite ------------------------------------------------------

CheckResult check_transform_gate(const ValidationOptions& opts) {
    Timer timer;
    Check check("transform-gate", 1e-4, 300.0);
    const CramerLundbergParams cl{2.0, 1.0, 1.0};
    const BrownianParams bm{1.0, 1.0};
    const double ps[] = {0.5, 1.5, 4.0};
    const double qs[] = {0.5, 1.5, 4.0};
    const double t_max_all = 30.0 / 0.5;

    const auto src_cl0 = occupation_transform_source(cl, 0.0, t_max_all);
    const auto src_bm = occupation_transform_source(bm);
    const auto src_x05 = occupation_transform_source(cl, 0.5, t_max_all);
    const auto src_x1 = occupation_transform_source(cl, 1.0, t_max_all);

    for (double p : ps) {
        const double t_max = 30.0 / p;
        for (double q : qs) {
            std::ostringstream at;
            at << "(p=" << p << ",q=" << q << ")";
            check.record(std::abs(numeric_double_transform(src_cl0, p, q, t_max) -
                                  closed_double_transform(cl, p, q)),
                         "cl x=0 " + at.str());
            check.record(std::abs(numeric_double_transform(src_bm, p, q, t_max) -
                                  closed_double_transform(bm, p, q)),
                         "bm x=0 " + at.str());
            check.record(std::abs(numeric_double_transform(src_x05, p, q, t_max) -
                                  closed_double_transform(cl, 0.5, p, q)),
                         "cl x=0.5 " + at.str());
            check.record(std::abs(numeric_double_transform(src_x1, p, q, t_max) -
                                  closed_double_transform(cl, 1.0, p, q)),
                         "cl x=1 " + at.str());
        }
    }
    // survival transform identity, tighter tolerance than the gate's
    for (double p : {0.5, 1.0, 2.0}) {
        const double dev =
            std::abs(survival_transform(cl, p) - 1.0 / (cl.c * lundberg_roots(cl, p).phi));
        check.require(dev <= 1e-5, fmt("survival-transform dev at p", p) + " above 1e-5");
    }
    return check.finish(timer, opts.enforce_runtime);
}

// ---- oracle suite ---------------------------------------------------------

// criteria sharing one pair of coupled runs: the exact-path gate and the
// per-excursion clock equivalence
void check_mc_gates(const ValidationOptions& opts, std::vector<CheckResult>& out) {
    const CramerLundbergParams m{2.0, 1.0, 1.0};
    const double t = 1.0, r = 0.2, q = 2.0;

    Timer timer_gate;
    Check gate("mc-oracle-gate", 3.0, 120.0);       // units of one standard error
    Check equiv("exponential-clock-equivalence", 3.0, 0.0);

    double equiv_elapsed = 0.0;
    for (double x : {0.0, 1.0}) {
        const auto counts =
            simulate_coupled(m, x, r, q, t, opts.mc_paths, opts.seed, opts.n_threads);

        const Estimate sigma = counts.estimate(counts.cumulative, "cumulative");
        const Estimate tau = counts.estimate(counts.classical, "classical");
        const Estimate agg = counts.estimate(counts.exp_aggregate, "exp-aggregate");
        const Estimate kappa = counts.estimate(counts.exp_per_excursion, "exp-per-excursion");

        const double cum = cumulative_parisian_probability(m, x, r, t);
        const double ruin = 1.0 - survival_probability(m, x, t);
        const double expp = exponential_parisian_probability(m, x, q, t);

        gate.record(std::abs(cum - sigma.value) / sigma.std_error, fmt("cumulative x", x));
        gate.record(std::abs(ruin - tau.value) / tau.std_error, fmt("classical x", x));
        gate.record(std::abs(expp - agg.value) / agg.std_error, fmt("exponential x", x));

        Timer tk;
        equiv.record(std::abs(expp - kappa.value) / kappa.std_error,
                     fmt("kappa-clock x", x));
        equiv_elapsed += tk.seconds();
    }
    out.push_back(gate.finish(timer_gate, opts.enforce_runtime));
    CheckResult eq = equiv.finish(timer_gate, false);
    eq.seconds = equiv_elapsed;  // shares the gate's simulation run
    out.push_back(eq);
}

CheckResult check_vanishing_allowance(const ValidationOptions& opts) {
    Timer timer;
    Check check("vanishing-allowance-limit", 0.02, 30.0);
    const CramerLundbergParams m{2.0, 1.0, 1.0};
    const double ruin = 1.0 - survival_probability(m, 1.0, 1.0);
    const OccupationLaw law(m, 1.0, 1.0);
    double prev_gap = 2.0;
    for (double r : {0.2, 0.1, 0.05, 0.025, 0.0125}) {
        const double cum = std::clamp(1.0 - law.cdf(r), 0.0, 1.0);
        const double gap = std::abs(cum - ruin);
        check.require(gap > 0.0, fmt("gap not positive at r", r));
        check.require(gap < prev_gap, fmt("gap not decreasing at r", r));
        prev_gap = gap;
        if (r == 0.0125) check.record(gap, "gap at r=0.0125");
    }
    return check.finish(timer, opts.enforce_runtime);
}

CheckResult check_brownian_oracle(const ValidationOptions& opts) {
    Timer timer;
    // normalized: deviation / (3 SE + 2 sqrt(dt)) must stay below 1
    Check check("brownian-oracle-gate", 1.0, 600.0);
    const BrownianParams m{1.0, 1.0};
    const double t = 1.0, r = 0.1;
    const double bias = 2.0 * std::sqrt(opts.bm_dt);
    const std::size_t bins = 20;

    const auto res0 = simulate_bm_occupation(m, 0.0, t, opts.bm_dt, opts.mc_paths, opts.seed,
                                             r, bins, opts.n_threads);
    for (std::size_t i = 1; i < bins; ++i) {
        const double edge = res0.histogram.edge(i);
        const double allow = 3.0 * res0.histogram.cdf_std_error(i) + bias;
        const double dev = std::abs(res0.histogram.cdf_at_edge(i) - occupation_cdf(m, t, edge));
        check.record(dev / allow, fmt("occupation cdf at s", edge));
    }
    {
        const double formula = cumulative_parisian_probability(m, 0.0, r, t);
        const double allow = 3.0 * res0.cumulative.std_error + bias;
        check.record(std::abs(formula - res0.cumulative.value) / allow, "cumulative x=0");
    }
    {
        const auto res = simulate_bm_occupation(m, 0.5, t, opts.bm_dt, opts.mc_paths,
                                                opts.seed + 1, r, bins, opts.n_threads);
        const double formula = cumulative_parisian_probability(m, 0.5, r, t);
        const double allow = 3.0 * res.cumulative.std_error + bias;
        check.record(std::abs(formula - res.cumulative.value) / allow, "cumulative x=0.5");
    }
    return check.finish(timer, opts.enforce_runtime);
}

CheckResult check_pathwise_orderings(const ValidationOptions& opts) {
    Timer timer;
    Check check("pathwise-orderings", 0.0, 0.0);
    const CramerLundbergParams m{2.0, 1.0, 1.0};
    for (double x : {0.0, 1.0}) {
        const auto counts = simulate_coupled(m, x, 0.2, 2.0, 1.0, opts.ordering_paths,
                                             opts.seed + 1000, opts.n_threads);
        check.record(static_cast<double>(counts.ordering_violations),
                     fmt("violations x", x));
    }
    return check.finish(timer, opts.enforce_runtime);
}

}  // namespace

std::vector<CheckResult> run_identity_suite(const ValidationOptions& opts) {
    std::vector<CheckResult> out;
    out.push_back(check_exact_at_zero(opts));
    out.push_back(check_ultimate_survival(opts));
    out.push_back(check_normalization(opts));
    out.push_back(check_special_functions(opts));
    return out;
}

std::vector<CheckResult> run_transform_suite(const ValidationOptions& opts) {
    return {check_transform_gate(opts)};
}

std::vector<CheckResult> run_oracle_suite(const ValidationOptions& opts) {
    std::vector<CheckResult> out;
    check_mc_gates(opts, out);
    out.push_back(check_vanishing_allowance(opts));
    out.push_back(check_brownian_oracle(opts));
    out.push_back(check_pathwise_orderings(opts));
    return out;
}

std::vector<CheckResult> run_all_suites(const ValidationOptions& opts) {
    std::vector<CheckResult> out = run_identity_suite(opts);
    for (auto& r : run_transform_suite(opts)) out.push_back(std::move(r));
    for (auto& r : run_oracle_suite(opts)) out.push_back(std::move(r));
    return out;
}

}  // namespace ruinkit
