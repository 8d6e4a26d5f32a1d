#include "qgf/pricing/indifference.hpp"

#include <cmath>

#include "qgf/core/math.hpp"
#include "qgf/core/parallel.hpp"
#include "qgf/drivers/cole_hopf.hpp"

namespace qgf {

namespace {

void column_stats(const Eigen::MatrixXd& values, Eigen::VectorXd& mean,
                  Eigen::VectorXd& se_out) {
    mean.resize(values.cols());
    se_out.resize(values.cols());
    for (Eigen::Index c = 0; c < values.cols(); ++c) {
        const auto [mu, se] = mean_and_stderr(values.col(c));
        mean(c) = mu;
        se_out(c) = se;
    }
}

struct TransformedSetup {
    LipschitzDriver driver;
    SolverConfig cfg;
    double gamma = 0.0;
};

TransformedSetup make_transformed_setup(const MarketModel& model, const PayoffSpec& payoff,
                                        const SolverConfig& cfg) {
    const auto spec = make_utility_driver(model);
    TransformOptions opts;
    opts.payoff_cap = payoff.bound();
    opts.horizon = model.horizon;
    opts.state_lo = model.r0 / 4.0;
    opts.state_hi = model.r0 * 4.0;

    TransformedSetup setup;
    setup.gamma = spec.gamma;
    setup.driver = transformed_driver(spec, opts);
    setup.cfg = cfg;
    setup.cfg.value_clamp = {setup.driver.p_floor, setup.driver.p_ceiling};
    const double gamma = spec.gamma;
    setup.cfg.basis.extra = [payoff, gamma](double x) { return std::exp(gamma * payoff(x)); };
    return setup;
}

/// Maps a transformed-space solution (P, Q) back to (Y, Z) in place.
void invert_cole_hopf(BsdeSolution& s, double gamma) {
    const int n = static_cast<int>(s.z.cols());
    const int m = static_cast<int>(s.y.rows());
    const double p0_mean = s.y0;
    const double p0_se = s.y0_stderr;
    for (int i = 0; i <= n; ++i) {
        for (int p = 0; p < m; ++p) {
            const double pv = s.y(p, i);
            if (!(pv > 0.0))
                throw NumericalError(
                    "indifference pricing: transformed value left the feasible region "
                    "despite clamping (step " + std::to_string(i) + ")");
            if (i < n) s.z(p, i) /= gamma * pv;
            s.y(p, i) = std::log(pv) / gamma;
        }
    }
    for (auto& v : s.y0_history) v = std::log(v) / gamma;
    s.y0 = std::log(p0_mean) / gamma;
    s.y0_stderr = p0_se / (std::abs(gamma) * p0_mean); // delta method on log(mean)
}

} // namespace

BsdeSolution solve_claim_transformed(const MarketModel& model, const PayoffSpec& payoff,
                                     const PathBatch& batch, const SolverConfig& cfg) {
    auto setup = make_transformed_setup(model, payoff, cfg);
    const double gamma = setup.gamma;
    if (gamma == 0.0)
        throw ConfigError("solve_claim_transformed: |rho| = 1 makes the transform "
                          "degenerate; solve the Lipschitz driver directly");
    const auto& drv = setup.driver;
    DriverFn driver = [&drv](double t, double x, double p, double q) {
        return drv.f(t, x, p, q);
    };
    BsdeSolution sol = solve_lipschitz(
        driver, [payoff, gamma](double x) { return std::exp(gamma * payoff(x)); }, batch,
        setup.cfg);
    invert_cole_hopf(sol, gamma);
    return sol;
}

Eigen::MatrixXd optimal_strategy(const BsdeSolution& claim_solution,
                                 const MarketModel& model, const PathBatch& paths,
                                 int threads) {
    const int m = paths.paths();
    const int n = paths.steps();
    if (claim_solution.z.rows() != m || claim_solution.z.cols() != n)
        throw ConfigError("optimal_strategy: control matrix does not match the batch");
    Eigen::MatrixXd lambda(m, n);
    parallel_blocks(m, threads, [&](std::ptrdiff_t, std::ptrdiff_t lo, std::ptrdiff_t hi) {
        for (std::ptrdiff_t p = lo; p < hi; ++p) {
            for (int i = 0; i < n; ++i) {
                const double t = paths.grid.node(i);
                const double r = paths.states(p, i);
                const double beta = model.asset_vol(t, r);
                const double th = model.asset_drift(t, r) / beta;
                lambda(p, i) = -(model.rho / beta) * claim_solution.z(p, i) +
                               th / (model.eta * beta);
            }
        }
    });
    return lambda;
}

PriceReport price_indifference(const MarketModel& model, const PayoffSpec& payoff,
                               const TimeGrid& grid, int paths, const SeedSpec& seed,
                               const SolverConfig& cfg, Stepping stepping) {
    validate(model);
    validate(payoff, model);

    const PathBatch batch = simulate_index(model, grid, paths, seed, stepping, cfg.threads);
    const double gamma = -model.eta * (1.0 - model.rho * model.rho);

    BsdeSolution claim, zero;
    if (gamma == 0.0) {
        // |rho| = 1: the quadratic term vanishes and the driver is already
        // Lipschitz, so no transform is involved.
        const auto spec = make_utility_driver(model);
        DriverFn driver = [spec](double t, double x, double y, double z) {
            return eval_quadratic(spec, t, x, y, z);
        };
        SolverConfig direct = cfg;
        direct.basis.extra = [payoff](double x) { return payoff(x); };
        claim = solve_lipschitz(driver, [payoff](double x) { return payoff(x); }, batch,
                                direct);
        zero = solve_lipschitz(driver, [](double) { return 0.0; }, batch, direct);
    } else {
        auto setup = make_transformed_setup(model, payoff, cfg);
        const auto& drv = setup.driver;
        DriverFn driver = [&drv](double t, double x, double p, double q) {
            return drv.f(t, x, p, q);
        };
        claim = solve_lipschitz(
            driver, [payoff, gamma](double x) { return std::exp(gamma * payoff(x)); },
            batch, setup.cfg);
        zero = solve_lipschitz(driver, [](double) { return 1.0; }, batch, setup.cfg);
        invert_cole_hopf(claim, gamma);
        invert_cole_hopf(zero, gamma);
    }

    PriceReport report;
    report.grid = grid;
    report.price = claim.y - zero.y;
    report.strategy = optimal_strategy(claim, model, batch, cfg.threads);
    column_stats(report.price, report.price_mean, report.price_stderr);
    column_stats(report.strategy, report.strategy_mean, report.strategy_stderr);
    report.p0 = claim.y0 - zero.y0;
    report.p0_stderr = std::sqrt(claim.y0_stderr * claim.y0_stderr +
                                 zero.y0_stderr * zero.y0_stderr);
    report.iterations_claim = claim.iterations;
    report.iterations_zero = zero.iterations;
    report.converged = claim.converged && zero.converged;
    report.rho = model.rho;
    report.eta = model.eta;
    report.strike = payoff.strike;
    report.steps = grid.steps();
    report.sample_paths = paths;
    report.seed = seed;
    return report;
}

} // namespace qgf
