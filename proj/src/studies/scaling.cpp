#include "qgf/studies/scaling.hpp"

#include <cmath>

#include "qgf/core/parallel.hpp"

namespace qgf {

ScalingReport sde_scaling_study(const MarketModel& model, const TimeGrid& grid,
                                const std::vector<int>& span_steps, int power, int paths,
                                const SeedSpec& seed, int threads) {
    if (span_steps.size() < 2)
        throw ConfigError("scaling study: need at least two spans for a slope");
    for (int k : span_steps)
        if (k < 1 || k > grid.steps())
            throw ConfigError("scaling study: spans must lie within the grid");
    if (power < 1) throw ConfigError("scaling study: power must be positive");

    const PathBatch batch =
        simulate_index(model, grid, paths, seed, Stepping::exact, threads);
    const int m = batch.paths();

    ScalingReport report;
    report.power = power;
    Eigen::VectorXd log_span(span_steps.size()), log_moment(span_steps.size());
    Eigen::VectorXd sample(m);
    for (std::size_t idx = 0; idx < span_steps.size(); ++idx) {
        const int k = span_steps[idx];
        parallel_blocks(m, threads, [&](std::ptrdiff_t, std::ptrdiff_t lo, std::ptrdiff_t hi) {
            for (std::ptrdiff_t p = lo; p < hi; ++p) {
                double sup = 0.0;
                for (int j = 1; j <= k; ++j)
                    sup = std::max(sup, std::abs(batch.states(p, j) - batch.states(p, 0)));
                sample(p) = std::pow(sup, power);
            }
        });
        ScalingRow row;
        row.span = k * grid.mesh();
        std::tie(row.moment, row.moment_se) = mean_and_stderr(sample);
        report.rows.push_back(row);
        log_span(idx) = std::log(row.span);
        log_moment(idx) = std::log(row.moment);
    }
    report.slope = fit_line(log_span, log_moment);
    return report;
}

} // namespace qgf
