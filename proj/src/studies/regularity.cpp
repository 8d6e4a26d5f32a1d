#include "qgf/studies/regularity.hpp"

#include <cmath>
#include <string>

#include "qgf/core/parallel.hpp"
#include "qgf/market/simulate.hpp"
#include "qgf/solver/lsmc.hpp"
#include "qgf/studies/zbar.hpp"

namespace qgf {

namespace {

int master_steps(const std::vector<int>& refinements, int fine_factor) {
    if (refinements.size() < 2)
        throw ConfigError("regularity study: need at least two refinements");
    int n_max = 0;
    for (int n : refinements) {
        if (n < 1) throw ConfigError("regularity study: refinements must be positive");
        n_max = std::max(n_max, n);
    }
    const int master = fine_factor * n_max;
    for (int n : refinements)
        if (master % n != 0)
            throw ConfigError("regularity study: refinement " + std::to_string(n) +
                              " does not divide the master grid " + std::to_string(master));
    return master;
}

MarketModel as_market(const AnalyticCase& cfg) {
    MarketModel m;
    m.mu_bar = cfg.mu;
    m.sigma_bar = cfg.sigma;
    m.r0 = cfg.r0;
    m.horizon = cfg.horizon;
    return m;
}

/// max_i sup over master nodes in (t_i, t_{i+1}] of E|Y_t - Y_{t_i}|^2,
/// with the standard error of the maximizing cell.
std::pair<double, double> y_increment_stat(const Eigen::MatrixXd& y_fine, int factor) {
    const auto m = y_fine.rows();
    const int cells = static_cast<int>((y_fine.cols() - 1)) / factor;
    double best = -1.0;
    int best_base = 0, best_off = 0;
    for (int i = 0; i < cells; ++i) {
        const int base = i * factor;
        for (int j = 1; j <= factor; ++j) {
            double acc = 0.0;
            for (Eigen::Index p = 0; p < m; ++p) {
                const double d = y_fine(p, base + j) - y_fine(p, base);
                acc += d * d;
            }
            const double mean = acc / m;
            if (mean > best) {
                best = mean;
                best_base = base;
                best_off = j;
            }
        }
    }
    Eigen::VectorXd cell(m);
    for (Eigen::Index p = 0; p < m; ++p) {
        const double d = y_fine(p, best_base + best_off) - y_fine(p, best_base);
        cell(p) = d * d;
    }
    return mean_and_stderr(cell);
}

RegularityReport finish_report(std::vector<RegularityRow> rows) {
    RegularityReport report;
    const int n = static_cast<int>(rows.size());
    Eigen::VectorXd log_h(n), log_y(n), log_z(n);
    for (int k = 0; k < n; ++k) {
        log_h(k) = std::log(rows[k].mesh);
        log_y(k) = std::log(rows[k].y_stat);
        log_z(k) = std::log(rows[k].z_stat);
        if (!(rows[k].z_stat <= rows[k].z_stat_left)) report.zbar_never_worse = false;
    }
    report.y_slope = fit_line(log_h, log_y);
    report.z_slope = fit_line(log_h, log_z);
    report.rows = std::move(rows);
    return report;
}

} // namespace

RegularityReport regularity_study(const AnalyticCase& cfg,
                                  const std::vector<int>& refinements, int paths,
                                  const SeedSpec& seed, const RegularityOptions& opts) {
    const int n_master = master_steps(refinements, opts.fine_factor);
    const TimeGrid master(cfg.horizon, n_master);
    const PathBatch batch =
        simulate_index(as_market(cfg), master, paths, seed, Stepping::exact, opts.threads);

    const double margin =
        std::abs(cfg.mu - 0.5 * cfg.sigma * cfg.sigma) * cfg.horizon +
        cfg.sigma * std::sqrt(2.0 * cfg.horizon) * (std::sqrt(2.0 * opts.outer_quad_points) + 2.0);
    const double log_lo = std::log(batch.states.minCoeff()) - margin;
    const double log_hi = std::log(batch.states.maxCoeff()) + margin;
    const ValueSurface surface(cfg, master.nodes(), log_lo, log_hi, opts.surface_points,
                               opts.threads);

    // Closed-form value and control along every master node.
    Eigen::MatrixXd y_fine(paths, n_master + 1), z_fine(paths, n_master + 1);
    parallel_blocks(paths, opts.threads,
                    [&](std::ptrdiff_t, std::ptrdiff_t lo, std::ptrdiff_t hi) {
                        for (std::ptrdiff_t p = lo; p < hi; ++p) {
                            for (int j = 0; j <= n_master; ++j) {
                                const double r = batch.states(p, j);
                                y_fine(p, j) = surface.value_at(j, r);
                                z_fine(p, j) = surface.control_at(j, r);
                            }
                        }
                    });

    const auto outer = gauss_hermite(opts.outer_quad_points);
    const double inv_sqrt_pi = 1.0 / std::sqrt(M_PI);

    std::vector<RegularityRow> rows;
    for (int n : refinements) {
        const TimeGrid coarse(cfg.horizon, n);
        const int factor = n_master / n;
        const double h = coarse.mesh();
        const double drift_h = (cfg.mu - 0.5 * cfg.sigma * cfg.sigma) * h;
        const double scale_h = cfg.sigma * std::sqrt(2.0 * h);
        const double dw_scale = std::sqrt(2.0 * h);

        // zbar_i(r) = (1/h) E[u(t_{i+1}, R') dW | R_{t_i} = r]: the
        // conditional-mean identity of the zero-driver equation, evaluated
        // by quadrature on the one-step transition.
        auto cond_mean = [&](int i, double r) {
            const int node = (i + 1) * factor;
            double acc = 0.0;
            for (int k = 0; k < opts.outer_quad_points; ++k) {
                const double x = outer.nodes(k);
                const double r_next = r * std::exp(drift_h + scale_h * x);
                acc += outer.weights(k) * surface.value_at(node, r_next) * dw_scale * x;
            }
            return acc * inv_sqrt_pi / h;
        };

        Eigen::MatrixXd coarse_states(paths, n + 1);
        for (int i = 0; i <= n; ++i) coarse_states.col(i) = batch.states.col(i * factor);

        const ZbarResult zb =
            zbar_analytic(master, z_fine, coarse, coarse_states, cond_mean, opts.threads);
        RegularityRow row;
        row.steps = n;
        row.mesh = h;
        std::tie(row.y_stat, row.y_stat_se) = y_increment_stat(y_fine, factor);
        row.z_stat = zb.statistic;
        row.z_stat_se = zb.statistic_se;
        row.z_stat_left = zb.statistic_left;
        row.z_stat_left_se = zb.statistic_left_se;
        rows.push_back(row);
    }
    return finish_report(std::move(rows));
}

RegularityReport regularity_study_solver_mode(const AnalyticCase& cfg,
                                              const std::vector<int>& refinements,
                                              int paths, const SeedSpec& seed,
                                              const RegularityOptions& opts) {
    const int n_master = master_steps(refinements, opts.fine_factor);
    const TimeGrid master(cfg.horizon, n_master);
    const PathBatch batch =
        simulate_index(as_market(cfg), master, paths, seed, Stepping::exact, opts.threads);

    SolverConfig scfg;
    scfg.threads = opts.threads;
    scfg.basis.extra = [cfg](double x) { return cfg.terminal(x); };
    const BsdeSolution sol = solve_lipschitz([](double, double, double, double) { return 0.0; },
                                             [cfg](double x) { return cfg.terminal(x); },
                                             batch, scfg);

    Eigen::MatrixXd z_fine(paths, n_master + 1);
    z_fine.leftCols(n_master) = sol.z;
    z_fine.col(n_master) = sol.z.col(n_master - 1);

    std::vector<RegularityRow> rows;
    for (int n : refinements) {
        const TimeGrid coarse(cfg.horizon, n);
        const int factor = n_master / n;
        Eigen::MatrixXd coarse_states(paths, n + 1);
        for (int i = 0; i <= n; ++i) coarse_states.col(i) = batch.states.col(i * factor);

        const ZbarResult zb = zbar_regression(master, z_fine, coarse, coarse_states,
                                              scfg.basis, opts.threads);
        RegularityRow row;
        row.steps = n;
        row.mesh = coarse.mesh();
        std::tie(row.y_stat, row.y_stat_se) = y_increment_stat(sol.y, factor);
        row.z_stat = zb.statistic;
        row.z_stat_se = zb.statistic_se;
        row.z_stat_left = zb.statistic_left;
        row.z_stat_left_se = zb.statistic_left_se;
        rows.push_back(row);
    }
    return finish_report(std::move(rows));
}

} // namespace qgf
