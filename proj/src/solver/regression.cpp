#include "qgf/solver/regression.hpp"

#include <cmath>

#include "qgf/core/errors.hpp"
#include "qgf/core/parallel.hpp"

namespace qgf {

RegressionPlan::RegressionPlan(const Eigen::VectorXd& states, const RegressionBasis& basis,
                               int threads)
    : threads_(threads) {
    const auto m = states.size();
    const int cols = basis.size();
    if (cols < 1) throw ConfigError("regress: empty basis");
    if (m < cols) throw ConfigError("regress: fewer paths than basis functions");
    if (!states.allFinite()) throw NumericalError("regress: non-finite states");

    state_mean_ = states.mean();
    const double var =
        (states.array() - state_mean_).square().sum() / std::max<Eigen::Index>(1, m - 1);
    state_sd_ = std::sqrt(var);
    if (!(state_sd_ > 1e-12 * std::max(1.0, std::abs(state_mean_)))) {
        degenerate_ = true; // constant states: every column is constant
        return;
    }

    design_.resize(m, cols);
    const int ndeg = static_cast<int>(basis.degrees.size());
    if (basis.extra) {
        double amax = 0.0;
        for (Eigen::Index p = 0; p < m; ++p) {
            const double v = basis.extra(states(p));
            design_(p, ndeg) = v;
            amax = std::max(amax, std::abs(v));
        }
        extra_scale_ = amax > 0.0 ? amax : 1.0;
        design_.col(ndeg) /= extra_scale_;
    }
    parallel_blocks(m, threads_, [&](std::ptrdiff_t, std::ptrdiff_t lo, std::ptrdiff_t hi) {
        for (std::ptrdiff_t p = lo; p < hi; ++p) {
            const double xs = (states(p) - state_mean_) / state_sd_;
            for (int k = 0; k < ndeg; ++k) {
                const int d = basis.degrees[k];
                double v = 1.0;
                for (int e = 0; e < d; ++e) v *= xs;
                design_(p, k) = v;
            }
        }
    });
    if (!design_.allFinite()) throw NumericalError("regress: non-finite design matrix");

    // Normal equations assembled in fixed-size blocks so the summation
    // order (and hence the result) is identical for any worker count.
    const std::ptrdiff_t nblocks = block_count(m);
    std::vector<Eigen::MatrixXd> parts(nblocks);
    parallel_blocks(m, threads_, [&](std::ptrdiff_t b, std::ptrdiff_t lo, std::ptrdiff_t hi) {
        const auto rows = design_.middleRows(lo, hi - lo);
        parts[b].noalias() = rows.transpose() * rows;
    });
    Eigen::MatrixXd gram = Eigen::MatrixXd::Zero(cols, cols);
    for (std::ptrdiff_t b = 0; b < nblocks; ++b) gram += parts[b];

    ldlt_.compute(gram);
    bool ok = ldlt_.info() == Eigen::Success;
    if (ok) {
        // probe solve to detect near-singularity that LDLT tolerates
        const Eigen::VectorXd probe = Eigen::VectorXd::Ones(cols);
        const Eigen::VectorXd sol = ldlt_.solve(probe);
        ok = sol.allFinite() && (gram * sol - probe).norm() <= 1e-8 * (1.0 + probe.norm());
    }
    if (!ok) {
        const double ridge = 1e-10 * gram.trace() / cols;
        ldlt_.compute(gram + ridge * Eigen::MatrixXd::Identity(cols, cols));
        const Eigen::VectorXd probe = Eigen::VectorXd::Ones(cols);
        const Eigen::VectorXd sol = ldlt_.solve(probe);
        if (ldlt_.info() != Eigen::Success || !sol.allFinite())
            throw NumericalError("regress: normal equations singular after ridge fallback");
    }
}

RegressionResult RegressionPlan::solve(const Eigen::VectorXd& values) const {
    if (!values.allFinite()) throw NumericalError("regress: non-finite values");
    RegressionResult out;
    out.state_mean = state_mean_;
    out.state_sd = state_sd_;
    out.extra_scale = extra_scale_;
    if (degenerate_) {
        out.coeffs = Eigen::VectorXd::Zero(1);
        out.coeffs(0) = values.mean();
        out.fitted = Eigen::VectorXd::Constant(values.size(), out.coeffs(0));
        return out;
    }
    if (values.size() != design_.rows())
        throw ConfigError("regress: values/states size mismatch");

    const std::ptrdiff_t nblocks = block_count(design_.rows());
    std::vector<Eigen::VectorXd> parts(nblocks);
    parallel_blocks(design_.rows(), threads_,
                    [&](std::ptrdiff_t b, std::ptrdiff_t lo, std::ptrdiff_t hi) {
                        parts[b].noalias() = design_.middleRows(lo, hi - lo).transpose() *
                                             values.segment(lo, hi - lo);
                    });
    Eigen::VectorXd rhs = Eigen::VectorXd::Zero(design_.cols());
    for (std::ptrdiff_t b = 0; b < nblocks; ++b) rhs += parts[b];

    out.coeffs = ldlt_.solve(rhs);
    if (!out.coeffs.allFinite())
        throw NumericalError("regress: singular normal equations");
    out.fitted.noalias() = design_ * out.coeffs;
    return out;
}

RegressionResult regress(const Eigen::VectorXd& values, const Eigen::VectorXd& states,
                         const RegressionBasis& basis, int threads) {
    if (states.size() != values.size())
        throw ConfigError("regress: values/states size mismatch");
    return RegressionPlan(states, basis, threads).solve(values);
}

} // namespace qgf
