#ifndef RUINKIT_OCCUPATION_DISTRIBUTION_HPP
#define RUINKIT_OCCUPATION_DISTRIBUTION_HPP

#include <vector>

namespace ruinkit {

// Law of the time spent below zero up to a fixed horizon: an atom at zero
// (no ruin by the horizon) plus a density sampled on a grid inside (0, horizon).
struct OccupationDistribution {
    double horizon;
    double atom_at_zero;
    std::vector<double> grid;
    std::vector<double> density;
};

}  // namespace ruinkit

#endif  // RUINKIT_OCCUPATION_DISTRIBUTION_HPP
