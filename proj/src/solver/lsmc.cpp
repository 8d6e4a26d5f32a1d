#include "qgf/solver/lsmc.hpp"

#include <cmath>
#include <string>

#include "qgf/core/math.hpp"
#include "qgf/core/parallel.hpp"
#include "qgf/drivers/truncation.hpp"

namespace qgf {

namespace {

template <typename F>
auto at_step(int step, F&& f) {
    try {
        return f();
    } catch (const NumericalError& e) {
        throw NumericalError(std::string(e.what()) + " (time step " +
                             std::to_string(step) + ")");
    }
}

} // namespace

BsdeSolution solve_lipschitz(const DriverFn& driver, const TerminalFn& terminal,
                             const PathBatch& paths, const SolverConfig& cfg) {
    paths.check_shapes();
    if (!(cfg.tolerance > 0.0)) throw ConfigError("solver: tolerance must be positive");
    if (cfg.max_iterations < 1) throw ConfigError("solver: need at least one iteration");

    const int m = paths.paths();
    const int n = paths.steps();
    const double h = paths.grid.mesh();
    const bool one_pass = cfg.scheme == SolverConfig::Scheme::one_pass_backward;

    BsdeSolution sol;
    sol.grid = paths.grid;
    sol.y.resize(m, n + 1);
    sol.z = Eigen::MatrixXd::Zero(m, n);
    sol.y_coeffs.resize(n);
    sol.z_coeffs.resize(n);

    Eigen::VectorXd g(m);
    parallel_blocks(m, cfg.threads, [&](std::ptrdiff_t, std::ptrdiff_t lo, std::ptrdiff_t hi) {
        for (std::ptrdiff_t p = lo; p < hi; ++p) g(p) = terminal(paths.states(p, n));
    });
    if (!g.allFinite()) throw NumericalError("solver: terminal values not finite");

    // The value matrix is updated in place while sweeping backward: columns
    // above the current step already hold this sweep's values, columns at or
    // below it still hold the previous sweep's (the Picard lag of the
    // driver's value argument).
    sol.y.col(n) = g;
    for (int i = 0; i < n; ++i) sol.y.col(i) = g;

    Eigen::VectorXd target(m), f_vals(m), driver_sum(m);
    const int max_sweeps = one_pass ? 1 : cfg.max_iterations;
    double y0_prev = 0.0;

    for (int sweep = 1; sweep <= max_sweeps; ++sweep) {
        driver_sum.setZero();
        for (int i = n - 1; i >= 0; --i) {
            const double t = paths.grid.node(i);
            const auto x = paths.states.col(i);
            const RegressionPlan plan =
                at_step(i, [&] { return RegressionPlan(x, cfg.basis, cfg.threads); });

            // Conditional mean of the next value, reused as a control
            // variate: regressing (Y_{i+1} - C_i) dW instead of Y_{i+1} dW
            // estimates the same conditional expectation without the O(1/h)
            // noise floor, and yields exactly Z = 0 for constant values.
            const RegressionResult cont =
                at_step(i, [&] { return plan.solve(sol.y.col(i + 1)); });
            target.array() =
                (sol.y.col(i + 1) - cont.fitted).array() * paths.dw1.col(i).array();
            RegressionResult rz = at_step(i, [&] { return plan.solve(target); });
            sol.z.col(i) = rz.fitted / h;
            sol.z_coeffs[i] = std::move(rz.coeffs);

            parallel_blocks(m, cfg.threads,
                            [&](std::ptrdiff_t, std::ptrdiff_t lo, std::ptrdiff_t hi) {
                                for (std::ptrdiff_t p = lo; p < hi; ++p) {
                                    const double y_arg =
                                        one_pass ? sol.y(p, i + 1) : sol.y(p, i);
                                    f_vals(p) = driver(t, x(p), y_arg, sol.z(p, i));
                                }
                            });
            if (!f_vals.allFinite())
                throw NumericalError("solver: driver produced non-finite values at step " +
                                     std::to_string(i));
            driver_sum += h * f_vals;
            target = sol.y.col(i + 1) + h * f_vals;

            RegressionResult ry = at_step(i, [&] { return plan.solve(target); });
            if (cfg.value_clamp) {
                ry.fitted = ry.fitted.cwiseMax(cfg.value_clamp->first)
                                .cwiseMin(cfg.value_clamp->second);
            }
            sol.y.col(i) = ry.fitted;
            sol.y_coeffs[i] = std::move(ry.coeffs);
        }
        const double y0 = sol.y.col(0).mean();
        sol.y0_history.push_back(y0);
        sol.iterations = sweep;
        sol.y0 = y0;
        // Sample means telescope through the regressions (the basis carries
        // a constant), so Y_0 is the mean of the accumulated pathwise target
        // and its Monte Carlo error is that mean's standard error.
        sol.y0_stderr = mean_and_stderr(g + driver_sum).second;
        if (one_pass) {
            sol.converged = true;
            break;
        }
        if (sweep > 1 && std::abs(y0 - y0_prev) < cfg.tolerance) {
            sol.converged = true;
            break;
        }
        y0_prev = y0;
    }
    return sol;
}

BsdeSolution solve_truncated(const QuadraticDriverSpec& spec, int level,
                             const TerminalFn& terminal, const PathBatch& paths,
                             const SolverConfig& cfg) {
    const QuadraticDriverSpec fn = truncated_driver(spec, level);
    DriverFn driver = [fn](double t, double x, double y, double z) {
        return eval_quadratic(fn, t, x, y, z);
    };
    return solve_lipschitz(driver, terminal, paths, cfg);
}

} // namespace qgf
