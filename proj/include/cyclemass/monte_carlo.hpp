#pragma once

#include <cstdint>

#include "cyclemass/edge_mass.hpp"

namespace cyclemass {

struct McReport {
    double estimate = 0;      // success frequency
    double std_error = 0;     // sqrt(p(1-p)/samples)
    std::uint64_t successes = 0;
    std::uint64_t samples = 0;
    int m = 0;
    std::uint64_t seed = 0;
};

/// Draws m edges i.i.d. from mu (inverse CDF over the sorted support edges);
/// success iff the edges are distinct and their union is an m-cycle. The
/// expectation is m! * beta(mu; m). Sample i depends only on (seed, i), so
/// the result is identical at every thread count.
McReport monte_carlo_cycle_probability(const FloatMass& mu, int m,
                                       std::uint64_t samples, std::uint64_t seed,
                                       int threads = 1);

} // namespace cyclemass
