#pragma once

#include <Eigen/Core>
#include <cstdint>

#include "qgf/core/time_grid.hpp"

namespace qgf {

/// Identifies a reproducible stream of random numbers. Every draw is a pure
/// function of (master, stream, path, step, component), so simulations are
/// bitwise reproducible for any execution order or worker count.
struct SeedSpec {
    std::uint64_t master = 0;
    std::uint64_t stream = 0;

    SeedSpec with_stream(std::uint64_t s) const { return {master, s}; }
};

/// Standard normal draw for the given counters.
double normal_draw(const SeedSpec& seed, std::uint64_t path, std::uint64_t step,
                   std::uint64_t component);

/// Uniform draw in (0, 1) for the given counters.
double uniform_draw(const SeedSpec& seed, std::uint64_t path, std::uint64_t step,
                    std::uint64_t component);

struct IncrementPair {
    Eigen::MatrixXd dw1; // paths x steps, N(0, h) entries
    Eigen::MatrixXd dw2;
};

/// Brownian increments of the two driving motions over the grid:
/// independent N(0, h) entries, components 0 and 1 of the seed stream.
IncrementPair draw_increments(const TimeGrid& grid, int paths, const SeedSpec& seed,
                              int threads = 1);

} // namespace qgf
