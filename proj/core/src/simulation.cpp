#include "ruinkit/simulation.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <thread>
#include <vector>

namespace ruinkit {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr std::uint64_t kBlockSize = 8192;

int resolve_threads(int n_threads) {
    if (n_threads > 0) return n_threads;
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

// Runs fn(block_index, first_path, n_in_block) over fixed-size path blocks.
// Blocks are scheduled dynamically but identified by index, so any reduction
// done in block order is independent of the worker count.
template <class Fn>
void for_each_block(std::uint64_t n_paths, int n_threads, Fn&& fn) {
    const std::uint64_t n_blocks = (n_paths + kBlockSize - 1) / kBlockSize;
    std::atomic<std::uint64_t> next{0};
    auto worker = [&]() {
        for (;;) {
            const std::uint64_t b = next.fetch_add(1);
            if (b >= n_blocks) return;
            const std::uint64_t first = b * kBlockSize;
            const std::uint64_t count = std::min(kBlockSize, n_paths - first);
            fn(b, first, count);
        }
    };
    const int workers = std::min<int>(resolve_threads(n_threads),
                                      static_cast<int>(std::max<std::uint64_t>(n_blocks, 1)));
    if (workers <= 1) {
        worker();
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int i = 0; i < workers; ++i) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
}

void check_common(double t, std::uint64_t n_paths) {
    if (!(t > 0.0)) throw std::domain_error("simulation: horizon t must be > 0");
    if (n_paths < 1) throw std::domain_error("simulation: n_paths must be >= 1");
}

}  // namespace

double PathSample::level_at(double s) const {
    double level = x0 + drift * s;
    for (std::size_t i = 0; i < jump_times.size() && jump_times[i] <= s; ++i)
        level -= jump_sizes[i];
    return level;
}

PathSample PathSample::from_events(double x0, double drift, double horizon,
                                   std::vector<double> times, std::vector<double> sizes) {
    if (times.size() != sizes.size())
        throw std::invalid_argument("PathSample: times and sizes must have equal length");
    if (!(drift > 0.0) || !(horizon > 0.0))
        throw std::invalid_argument("PathSample: drift and horizon must be > 0");

    PathSample path;
    path.x0 = x0;
    path.drift = drift;
    path.horizon = horizon;
    path.jump_times = std::move(times);
    path.jump_sizes = std::move(sizes);
    path.ruin_time = kInf;

    double level = x0;      // value just after the previous event
    double prev = 0.0;      // time of the previous event
    bool below = x0 < 0.0;  // strictly below zero
    double exc_start = below ? 0.0 : kInf;
    if (below) path.ruin_time = 0.0;

    auto close_excursion = [&](double end) {
        path.excursions.push_back({exc_start, end});
        below = false;
    };

    for (std::size_t i = 0; i < path.jump_times.size(); ++i) {
        const double ti = path.jump_times[i];
        if (!(ti > prev) || ti > horizon)
            throw std::invalid_argument("PathSample: jump times must increase inside (0, horizon]");
        if (below) {
            const double up = prev + (-level) / drift;
            if (up <= ti) close_excursion(up);
        }
        const double before = level + drift * (ti - prev);
        const double after = before - path.jump_sizes[i];
        if (!below && after < 0.0) {
            below = true;
            exc_start = ti;
            if (path.ruin_time == kInf) path.ruin_time = ti;
        }
        level = after;
        prev = ti;
    }
    if (below) {
        const double up = prev + (-level) / drift;
        close_excursion(std::min(up, horizon));
    }

    double occ = 0.0;
    for (const auto& e : path.excursions) occ += e.end - e.start;
    path.occupation_time = occ;
    return path;
}

PathSample simulate_path(const CramerLundbergParams& model, double x, double t, PathRng& rng) {
    std::vector<double> times;
    std::vector<double> sizes;
    double s = rng.exponential(model.lambda);
    while (s <= t) {
        times.push_back(s);
        sizes.push_back(rng.exponential(model.alpha));
        s += rng.exponential(model.lambda);
    }
    return PathSample::from_events(x, model.c, t, std::move(times), std::move(sizes));
}

RuinIndicators evaluate_ruin(const PathSample& path, double r, double q, PathRng& rng) {
    RuinIndicators ind{};
    ind.occupation = path.occupation_time;
    ind.classical = path.ruined();
    ind.cumulative = path.occupation_time > r;

    ind.parisian = false;
    for (const auto& e : path.excursions) {
        if (e.end - e.start > r) {
            ind.parisian = true;
            break;
        }
    }

    ind.exp_aggregate = path.occupation_time > rng.exponential(q);

    ind.exp_per_excursion = false;
    for (const auto& e : path.excursions) {
        if (e.end - e.start > rng.exponential(q)) {
            ind.exp_per_excursion = true;
            break;
        }
    }
    return ind;
}

double CoupledRuinCounts::mean_occupation_std_error() const {
    const double n = static_cast<double>(n_paths);
    const double mean = occupation_sum / n;
    const double var = std::max(0.0, occupation_sq_sum / n - mean * mean);
    return std::sqrt(var / n);
}

Estimate CoupledRuinCounts::estimate(std::uint64_t count, const std::string& name) const {
    const double n = static_cast<double>(n_paths);
    const double p = static_cast<double>(count) / n;
    return {p, std::sqrt(p * (1.0 - p) / n), n_paths, seed, name};
}

CoupledRuinCounts simulate_coupled(const CramerLundbergParams& model, double x, double r,
                                   double q, double t, std::uint64_t n_paths,
                                   std::uint64_t seed, int n_threads) {
    model.validate();
    check_common(t, n_paths);
    if (x < 0.0) throw std::domain_error("simulate_coupled: x must be >= 0");
    if (!(r > 0.0) || !(q > 0.0))
        throw std::domain_error("simulate_coupled: r and q must be > 0");

    struct Block {
        std::uint64_t counts[5] = {0, 0, 0, 0, 0};
        std::uint64_t violations = 0;
        double occ_sum = 0.0;
        double occ_sq_sum = 0.0;
    };
    const std::uint64_t n_blocks = (n_paths + kBlockSize - 1) / kBlockSize;
    std::vector<Block> blocks(n_blocks);

    for_each_block(n_paths, n_threads, [&](std::uint64_t b, std::uint64_t first,
                                           std::uint64_t count) {
        Block& blk = blocks[b];
        for (std::uint64_t i = 0; i < count; ++i) {
            PathRng rng(seed, first + i);
            const PathSample path = simulate_path(model, x, t, rng);
            const RuinIndicators ind = evaluate_ruin(path, r, q, rng);
            blk.counts[0] += ind.classical;
            blk.counts[1] += ind.cumulative;
            blk.counts[2] += ind.parisian;
            blk.counts[3] += ind.exp_aggregate;
            blk.counts[4] += ind.exp_per_excursion;
            blk.occ_sum += ind.occupation;
            blk.occ_sq_sum += ind.occupation * ind.occupation;
            if ((ind.parisian && !ind.cumulative) || (ind.cumulative && !ind.classical) ||
                (ind.parisian && !ind.classical))
                ++blk.violations;
        }
    });

    CoupledRuinCounts total;
    total.n_paths = n_paths;
    total.seed = seed;
    for (const Block& blk : blocks) {
        total.classical += blk.counts[0];
        total.cumulative += blk.counts[1];
        total.parisian += blk.counts[2];
        total.exp_aggregate += blk.counts[3];
        total.exp_per_excursion += blk.counts[4];
        total.ordering_violations += blk.violations;
        total.occupation_sum += blk.occ_sum;
        total.occupation_sq_sum += blk.occ_sq_sum;
    }
    return total;
}

Estimate estimate_classical_ruin(const CramerLundbergParams& model, double x, double t,
                                 std::uint64_t n_paths, std::uint64_t seed, int n_threads) {
    const auto counts = simulate_coupled(model, x, t, 1.0, t, n_paths, seed, n_threads);
    return counts.estimate(counts.classical, "classical");
}

Estimate estimate_cumulative_parisian(const CramerLundbergParams& model, double x, double r,
                                      double t, std::uint64_t n_paths, std::uint64_t seed,
                                      int n_threads) {
    const auto counts = simulate_coupled(model, x, r, 1.0, t, n_paths, seed, n_threads);
    return counts.estimate(counts.cumulative, "cumulative");
}

Estimate estimate_parisian(const CramerLundbergParams& model, double x, double r, double t,
                           std::uint64_t n_paths, std::uint64_t seed, int n_threads) {
    const auto counts = simulate_coupled(model, x, r, 1.0, t, n_paths, seed, n_threads);
    return counts.estimate(counts.parisian, "parisian");
}

Estimate estimate_exponential_parisian(const CramerLundbergParams& model, double x, double q,
                                       double t, std::uint64_t n_paths, std::uint64_t seed,
                                       int n_threads) {
    const auto counts = simulate_coupled(model, x, t, q, t, n_paths, seed, n_threads);
    return counts.estimate(counts.exp_per_excursion, "exponential");
}

double OccupationHistogram::edge(std::size_t i) const {
    return horizon * static_cast<double>(i) / static_cast<double>(counts.size());
}

double OccupationHistogram::cdf_at_edge(std::size_t i) const {
    std::uint64_t below = atom_count;
    for (std::size_t b = 0; b < i && b < counts.size(); ++b) below += counts[b];
    return static_cast<double>(below) / static_cast<double>(n_paths);
}

double OccupationHistogram::cdf_std_error(std::size_t i) const {
    const double p = cdf_at_edge(i);
    return std::sqrt(p * (1.0 - p) / static_cast<double>(n_paths));
}

namespace {

void histogram_insert(OccupationHistogram& hist, double occ) {
    if (occ == 0.0) {
        ++hist.atom_count;
        return;
    }
    const auto n_bins = hist.counts.size();
    auto idx = static_cast<std::size_t>(occ / hist.horizon * static_cast<double>(n_bins));
    if (idx >= n_bins) idx = n_bins - 1;
    ++hist.counts[idx];
}

}  // namespace

OccupationHistogram simulate_cl_occupation(const CramerLundbergParams& model, double x, double t,
                                           std::uint64_t n_paths, std::uint64_t seed,
                                           std::size_t n_bins, int n_threads) {
    model.validate();
    check_common(t, n_paths);
    if (x < 0.0) throw std::domain_error("simulate_cl_occupation: x must be >= 0");
    if (n_bins < 1) throw std::domain_error("simulate_cl_occupation: n_bins must be >= 1");

    const std::uint64_t n_blocks = (n_paths + kBlockSize - 1) / kBlockSize;
    std::vector<OccupationHistogram> partial(n_blocks);
    for (auto& h : partial) {
        h.horizon = t;
        h.counts.assign(n_bins, 0);
    }

    for_each_block(n_paths, n_threads,
                   [&](std::uint64_t b, std::uint64_t first, std::uint64_t count) {
                       OccupationHistogram& h = partial[b];
                       for (std::uint64_t i = 0; i < count; ++i) {
                           PathRng rng(seed, first + i);
                           histogram_insert(h, simulate_path(model, x, t, rng).occupation_time);
                       }
                   });

    OccupationHistogram hist;
    hist.horizon = t;
    hist.n_paths = n_paths;
    hist.counts.assign(n_bins, 0);
    for (const auto& h : partial) {
        hist.atom_count += h.atom_count;
        for (std::size_t bidx = 0; bidx < n_bins; ++bidx) hist.counts[bidx] += h.counts[bidx];
    }
    return hist;
}

BmOccupationResult simulate_bm_occupation(const BrownianParams& model, double x, double t,
                                          double dt, std::uint64_t n_paths, std::uint64_t seed,
                                          double r, std::size_t n_bins, int n_threads) {
    model.validate();
    check_common(t, n_paths);
    if (x < 0.0) throw std::domain_error("simulate_bm_occupation: x must be >= 0");
    if (!(dt > 0.0) || dt > t) throw std::domain_error("simulate_bm_occupation: need 0 < dt <= t");
    if (!(r > 0.0)) throw std::domain_error("simulate_bm_occupation: r must be > 0");
    if (n_bins < 1) throw std::domain_error("simulate_bm_occupation: n_bins must be >= 1");

    const auto n_steps = static_cast<std::uint64_t>(std::llround(t / dt));
    const double step = t / static_cast<double>(n_steps);
    const double drift_step = model.c * step;
    const double vol_step = model.sigma * std::sqrt(step);

    struct Block {
        OccupationHistogram hist;
        std::uint64_t classical = 0;
        std::uint64_t cumulative = 0;
    };
    const std::uint64_t n_blocks = (n_paths + kBlockSize - 1) / kBlockSize;
    std::vector<Block> blocks(n_blocks);
    for (auto& b : blocks) {
        b.hist.horizon = t;
        b.hist.counts.assign(n_bins, 0);
    }

    for_each_block(n_paths, n_threads,
                   [&](std::uint64_t b, std::uint64_t first, std::uint64_t count) {
                       Block& blk = blocks[b];
                       for (std::uint64_t i = 0; i < count; ++i) {
                           PathRng rng(seed, first + i);
                           double level = x;
                           std::uint64_t below = 0;
                           for (std::uint64_t k = 0; k < n_steps; ++k) {
                               level += drift_step + vol_step * rng.normal();
                               below += level < 0.0;
                           }
                           const double occ = step * static_cast<double>(below);
                           histogram_insert(blk.hist, occ);
                           blk.classical += below > 0;
                           blk.cumulative += occ > r;
                       }
                   });

    BmOccupationResult out;
    out.histogram.horizon = t;
    out.histogram.n_paths = n_paths;
    out.histogram.counts.assign(n_bins, 0);
    std::uint64_t classical = 0, cumulative = 0;
    for (const auto& blk : blocks) {
        out.histogram.atom_count += blk.hist.atom_count;
        for (std::size_t bidx = 0; bidx < n_bins; ++bidx)
            out.histogram.counts[bidx] += blk.hist.counts[bidx];
        classical += blk.classical;
        cumulative += blk.cumulative;
    }
    const double n = static_cast<double>(n_paths);
    const double pc = static_cast<double>(classical) / n;
    const double ps = static_cast<double>(cumulative) / n;
    out.classical = {pc, std::sqrt(pc * (1.0 - pc) / n), n_paths, seed, "classical"};
    out.cumulative = {ps, std::sqrt(ps * (1.0 - ps) / n), n_paths, seed, "cumulative"};
    return out;
}

}  // namespace ruinkit
