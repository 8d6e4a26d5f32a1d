#pragma once

#include <Eigen/Cholesky>
#include <Eigen/Core>
#include <functional>
#include <vector>

namespace qgf {

/// Cross-sectional regression basis: monomials of the (standardized) state
/// plus an optional payoff-style column evaluated on the raw state. The
/// default mirrors the reference setup: degrees 0..4 and the terminal
/// function of the equation being solved.
struct RegressionBasis {
    std::vector<int> degrees = {0, 1, 2, 3, 4};
    std::function<double(double)> extra;

    int size() const { return static_cast<int>(degrees.size()) + (extra ? 1 : 0); }
};

struct RegressionResult {
    Eigen::VectorXd coeffs; // in the internal standardized basis
    Eigen::VectorXd fitted;
    double state_mean = 0.0;
    double state_sd = 1.0;
    double extra_scale = 1.0;
};

/// Least-squares fit of values on basis(states) via normal equations on
/// standardized columns, with a small ridge fallback on near-singularity.
/// Fitted values estimate the conditional expectation E[values | state].
/// When the states are (numerically) constant the fit degenerates to the
/// projection onto constants, i.e. the plain mean.
RegressionResult regress(const Eigen::VectorXd& values, const Eigen::VectorXd& states,
                         const RegressionBasis& basis, int threads = 1);

/// Design matrix and factored normal equations for one state cross-section,
/// reusable across several regression targets at the same time step.
class RegressionPlan {
public:
    RegressionPlan(const Eigen::VectorXd& states, const RegressionBasis& basis,
                   int threads = 1);

    RegressionResult solve(const Eigen::VectorXd& values) const;
    bool degenerate() const { return degenerate_; }

private:
    int threads_;
    bool degenerate_ = false; // constant states: projection onto the mean
    double state_mean_ = 0.0;
    double state_sd_ = 1.0;
    double extra_scale_ = 1.0;
    Eigen::MatrixXd design_;
    Eigen::LDLT<Eigen::MatrixXd> ldlt_;
};

} // namespace qgf
