#include "qgf/core/random.hpp"

#include <cmath>

#include "qgf/core/errors.hpp"
#include "qgf/core/math.hpp"
#include "qgf/core/parallel.hpp"

namespace qgf {

namespace {

std::uint64_t counter_key(const SeedSpec& seed, std::uint64_t path, std::uint64_t step,
                          std::uint64_t component) {
    std::uint64_t h = mix64(seed.master);
    h = mix64(h ^ (seed.stream + 0x8BADF00D5EEDULL));
    h = mix64(h ^ (path + 0xA5A5A5A5A5A5A5A5ULL));
    h = mix64(h ^ (step + 0xC3C3C3C3C3C3C3C3ULL));
    h = mix64(h ^ component);
    return h;
}

} // namespace

double uniform_draw(const SeedSpec& seed, std::uint64_t path, std::uint64_t step,
                    std::uint64_t component) {
    const std::uint64_t h = counter_key(seed, path, step, component);
    // 53 mantissa bits, offset by half a grid cell so the result is in (0, 1).
    return (static_cast<double>(h >> 11) + 0.5) * 0x1.0p-53;
}

double normal_draw(const SeedSpec& seed, std::uint64_t path, std::uint64_t step,
                   std::uint64_t component) {
    return norm_cdf_inv(uniform_draw(seed, path, step, component));
}

IncrementPair draw_increments(const TimeGrid& grid, int paths, const SeedSpec& seed,
                              int threads) {
    if (paths < 1) throw ConfigError("draw_increments: need at least one path");
    const int n = grid.steps();
    const double sqrt_h = std::sqrt(grid.mesh());
    IncrementPair out;
    out.dw1.resize(paths, n);
    out.dw2.resize(paths, n);
    parallel_blocks(paths, threads, [&](std::ptrdiff_t, std::ptrdiff_t lo, std::ptrdiff_t hi) {
        for (std::ptrdiff_t p = lo; p < hi; ++p) {
            for (int j = 0; j < n; ++j) {
                out.dw1(p, j) = sqrt_h * normal_draw(seed, p, j, 0);
                out.dw2(p, j) = sqrt_h * normal_draw(seed, p, j, 1);
            }
        }
    });
    return out;
}

} // namespace qgf
