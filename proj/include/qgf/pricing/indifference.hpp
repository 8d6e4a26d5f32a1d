#pragma once

#include "qgf/market/payoff.hpp"
#include "qgf/market/simulate.hpp"
#include "qgf/solver/lsmc.hpp"

namespace qgf {

/// Indifference price and hedge report: the difference of the two BSDE
/// value processes (claim terminal and zero terminal) on a shared path set,
/// p_t = Y^F_t - Y^0_t, plus the optimal investment in the tradable asset.
struct PriceReport {
    TimeGrid grid{1.0, 1};
    double p0 = 0.0;
    double p0_stderr = 0.0;
    Eigen::MatrixXd price;    // paths x (steps + 1)
    Eigen::MatrixXd strategy; // paths x steps, monetary investment
    Eigen::VectorXd price_mean, price_stderr;       // per node
    Eigen::VectorXd strategy_mean, strategy_stderr; // per step
    int iterations_claim = 0;
    int iterations_zero = 0;
    bool converged = false;

    // resolved inputs, for reporting
    double rho = 0.0, eta = 0.0, strike = 0.0;
    int steps = 0, sample_paths = 0;
    SeedSpec seed;
};

/// Exponential-utility indifference price of payoff(R_T). For |rho| < 1 the
/// quadratic driver is transformed to its Lipschitz form, both terminal
/// conditions are solved by LSMC, and the solutions are mapped back. For
/// |rho| = 1 the quadratic term vanishes and the driver is solved directly.
PriceReport price_indifference(const MarketModel& model, const PayoffSpec& payoff,
                               const TimeGrid& grid, int paths, const SeedSpec& seed,
                               const SolverConfig& cfg,
                               Stepping stepping = Stepping::exact);

/// Solves the claim equation (terminal F(R_T), quadratic pricing driver)
/// through the exponential transform and maps the solution back to the
/// original coordinates. Requires |rho| < 1. The Y_0 stderr is delta-method
/// propagated through the inverse transform.
BsdeSolution solve_claim_transformed(const MarketModel& model, const PayoffSpec& payoff,
                                     const PathBatch& batch, const SolverConfig& cfg);

/// Optimal investment strategy from the claim solution's control process:
/// lambda_t = -(rho / beta) Z_t + theta / (eta beta).
Eigen::MatrixXd optimal_strategy(const BsdeSolution& claim_solution,
                                 const MarketModel& model, const PathBatch& paths,
                                 int threads = 1);

} // namespace qgf
