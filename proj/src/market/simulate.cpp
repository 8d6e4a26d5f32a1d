#include "qgf/market/simulate.hpp"

#include <cmath>
#include <string>

#include "qgf/core/parallel.hpp"

namespace qgf {

namespace {

[[noreturn]] void report_blowup(const char* what, std::ptrdiff_t path, int step) {
    throw SimulationError(std::string(what) + ": non-finite value on path " +
                          std::to_string(path) + " at step " + std::to_string(step));
}

} // namespace

PathBatch simulate_index(const MarketModel& model, const TimeGrid& grid, int paths,
                         const SeedSpec& seed, Stepping stepping, int threads) {
    if (stepping == Stepping::exact && !model.geometric_index())
        throw ConfigError("simulate_index: exact stepping requires the geometric instance");

    PathBatch batch;
    batch.grid = grid;
    auto inc = draw_increments(grid, paths, seed, threads);
    batch.dw1 = std::move(inc.dw1);
    batch.dw2 = std::move(inc.dw2);
    batch.states.resize(paths, grid.steps() + 1);

    const int n = grid.steps();
    const double h = grid.mesh();
    const bool exact = stepping == Stepping::exact;
    const double drift = model.mu_bar - 0.5 * model.sigma_bar * model.sigma_bar;

    parallel_blocks(paths, threads, [&](std::ptrdiff_t, std::ptrdiff_t lo, std::ptrdiff_t hi) {
        for (std::ptrdiff_t p = lo; p < hi; ++p) {
            double r = model.r0;
            batch.states(p, 0) = r;
            for (int j = 0; j < n; ++j) {
                const double dw = batch.dw1(p, j);
                if (exact) {
                    r *= std::exp(drift * h + model.sigma_bar * dw);
                } else {
                    const double t = grid.node(j);
                    r += model.index_drift(t, r) * h + model.index_vol(t, r) * dw;
                }
                if (!std::isfinite(r)) report_blowup("simulate_index", p, j + 1);
                batch.states(p, j + 1) = r;
            }
        }
    });
    return batch;
}

Eigen::MatrixXd simulate_asset(const MarketModel& model, const PathBatch& index,
                               Stepping stepping, int threads) {
    if (!(std::abs(model.rho) <= 1.0))
        throw ConfigError("simulate_asset: correlation must lie in [-1, 1]");
    if (stepping == Stepping::exact && !model.constant_asset())
        throw ConfigError("simulate_asset: exact stepping requires constant coefficients");

    const int paths = index.paths();
    const int n = index.steps();
    const double h = index.grid.mesh();
    const double rho = model.rho;
    const double rho_perp = std::sqrt(std::max(0.0, 1.0 - rho * rho));
    const bool exact = stepping == Stepping::exact;
    const double drift = model.alpha_bar - 0.5 * model.beta_bar * model.beta_bar;

    Eigen::MatrixXd s(paths, n + 1);
    parallel_blocks(paths, threads, [&](std::ptrdiff_t, std::ptrdiff_t lo, std::ptrdiff_t hi) {
        for (std::ptrdiff_t p = lo; p < hi; ++p) {
            double v = model.s0;
            s(p, 0) = v;
            for (int j = 0; j < n; ++j) {
                const double dw3 = rho * index.dw1(p, j) + rho_perp * index.dw2(p, j);
                if (exact) {
                    v *= std::exp(drift * h + model.beta_bar * dw3);
                } else {
                    const double t = index.grid.node(j);
                    const double r = index.states(p, j);
                    v += v * (model.asset_drift(t, r) * h + model.asset_vol(t, r) * dw3);
                }
                if (!std::isfinite(v)) report_blowup("simulate_asset", p, j + 1);
                s(p, j + 1) = v;
            }
        }
    });
    return s;
}

} // namespace qgf
