#include "qgf/studies/truncation_study.hpp"

#include <cmath>

#include "qgf/core/math.hpp"
#include "qgf/core/parallel.hpp"

namespace qgf {

TruncationReport truncation_study(const MarketModel& model, const PayoffSpec& payoff,
                                  const TimeGrid& grid, int paths, const SeedSpec& seed,
                                  const SolverConfig& cfg, const std::vector<int>& levels) {
    if (levels.empty()) throw ConfigError("truncation study: need at least one level");
    validate(model);
    validate(payoff, model);

    const PathBatch batch =
        simulate_index(model, grid, paths, seed, Stepping::exact, cfg.threads);
    SolverConfig run_cfg = cfg;
    run_cfg.basis.extra = [payoff](double x) { return payoff(x); };

    const BsdeSolution reference = solve_claim_transformed(model, payoff, batch, cfg);
    const auto spec = make_utility_driver(model);

    TruncationReport report;
    report.reference_y0 = reference.y0;
    report.reference_iterations = reference.iterations;

    const int m = batch.paths();
    const int n = batch.steps();
    const double h = grid.mesh();
    double prev_y = 0.0, prev_y_se = 0.0, prev_z = 0.0, prev_z_se = 0.0;

    for (std::size_t k = 0; k < levels.size(); ++k) {
        const int level = levels[k];
        const BsdeSolution sol = solve_truncated(
            spec, level, [payoff](double x) { return payoff(x); }, batch, run_cfg);

        Eigen::VectorXd sup_err(m), int_err(m);
        parallel_blocks(m, cfg.threads,
                        [&](std::ptrdiff_t, std::ptrdiff_t lo, std::ptrdiff_t hi) {
                            for (std::ptrdiff_t p = lo; p < hi; ++p) {
                                double sup = 0.0, acc = 0.0;
                                for (int i = 0; i <= n; ++i) {
                                    const double dy = sol.y(p, i) - reference.y(p, i);
                                    sup = std::max(sup, dy * dy);
                                    if (i < n) {
                                        const double dz = sol.z(p, i) - reference.z(p, i);
                                        acc += dz * dz * h;
                                    }
                                }
                                sup_err(p) = sup;
                                int_err(p) = acc;
                            }
                        });

        TruncationRow row;
        row.level = level;
        row.iterations = sol.iterations;
        row.converged = sol.converged;
        std::tie(row.y_sup_err, row.y_sup_err_se) = mean_and_stderr(sup_err);
        std::tie(row.z_int_err, row.z_int_err_se) = mean_and_stderr(int_err);
        if (k > 0) {
            const double band_y = 2.0 * std::hypot(row.y_sup_err_se, prev_y_se);
            const double band_z = 2.0 * std::hypot(row.z_int_err_se, prev_z_se);
            row.nonincreasing = row.y_sup_err <= prev_y + band_y &&
                                row.z_int_err <= prev_z + band_z;
            if (!row.nonincreasing) report.all_nonincreasing = false;
        }
        prev_y = row.y_sup_err;
        prev_y_se = row.y_sup_err_se;
        prev_z = row.z_int_err;
        prev_z_se = row.z_int_err_se;
        report.rows.push_back(row);
    }
    return report;
}

} // namespace qgf
