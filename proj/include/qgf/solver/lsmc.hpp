#pragma once

#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "qgf/core/path_batch.hpp"
#include "qgf/drivers/quadratic.hpp"
#include "qgf/solver/regression.hpp"

namespace qgf {

using DriverFn = std::function<double(double, double, double, double)>; // (t, x, y, z)
using TerminalFn = std::function<double(double)>;

struct SolverConfig {
    enum class Scheme { picard_lsmc, one_pass_backward };

    double tolerance = 1e-5; // stop on |change of Y_0| between sweeps
    int max_iterations = 30;
    Scheme scheme = Scheme::picard_lsmc;
    RegressionBasis basis;
    int threads = 1;
    // Clamp applied to regressed value estimates; used by the exponential
    // transform pipeline to keep log(p) defined against Monte Carlo noise.
    std::optional<std::pair<double, double>> value_clamp;
};

struct BsdeSolution {
    TimeGrid grid{1.0, 1};
    Eigen::MatrixXd y; // paths x (steps + 1); terminal column pinned to g
    Eigen::MatrixXd z; // paths x steps
    std::vector<Eigen::VectorXd> y_coeffs; // per time step, last sweep
    std::vector<Eigen::VectorXd> z_coeffs;
    int iterations = 0;
    bool converged = false;
    double y0 = 0.0;
    double y0_stderr = 0.0;
    std::vector<double> y0_history; // Y_0 after each sweep
};

/// Backward least-squares Monte Carlo solve of
///   Y_t = g(X_T) + int f(s, X_s, Y_s, Z_s) ds - int Z_s dW^1_s
/// for a globally Lipschitz driver. Per sweep and time step:
///   Z_i = (1/h) Reg[ Y_{i+1} dW_i | basis(X_i) ]
///   Y_i = Reg[ Y_{i+1} + h f(t_i, X_i, y_prev_i, Z_i) | basis(X_i) ]
/// where Y_{i+1} are the current sweep's values and y_prev is the previous
/// sweep's value at t_i (Picard lag of the driver's value argument); sweeps
/// repeat until Y_0 moves less than the tolerance. The one-pass scheme runs
/// a single sweep with the driver's value argument taken at t_{i+1}.
BsdeSolution solve_lipschitz(const DriverFn& driver, const TerminalFn& terminal,
                             const PathBatch& paths, const SolverConfig& cfg);

/// Same scheme for the truncation route: the quadratic driver is made
/// globally Lipschitz by composing z with the level-n truncation.
BsdeSolution solve_truncated(const QuadraticDriverSpec& spec, int level,
                             const TerminalFn& terminal, const PathBatch& paths,
                             const SolverConfig& cfg);

} // namespace qgf
