#pragma once

#include <Eigen/Core>
#include <functional>

#include "qgf/core/time_grid.hpp"
#include "qgf/solver/regression.hpp"

namespace qgf {

/// Best grid-adapted piecewise-constant approximation of the control
/// process, zbar_i = (1/h) E[ int_{t_i}^{t_i+1} Z_s ds | F_{t_i} ], together
/// with the squared-integral regularity statistic
///   sum_i E int_{t_i}^{t_i+1} (Z_s - zbar_i)^2 ds
/// and its left-endpoint counterpart (zbar replaced by Z_{t_i}), which is
/// never smaller by the projection property.
struct ZbarResult {
    Eigen::MatrixXd zbar;      // paths x coarse steps
    double statistic = 0.0;    // with zbar
    double statistic_se = 0.0;
    double statistic_left = 0.0; // with the left-endpoint value
    double statistic_left_se = 0.0;
};

/// Conditional expectation realized by cross-sectional regression of the
/// pathwise fine-grid time average on basis(state at t_i). z_fine carries
/// values at every fine node (paths x fine steps + 1); the fine grid must
/// refine the coarse grid.
ZbarResult zbar_regression(const TimeGrid& fine, const Eigen::MatrixXd& z_fine,
                           const TimeGrid& coarse, const Eigen::MatrixXd& coarse_states,
                           const RegressionBasis& basis, int threads = 1);

/// Conditional expectation supplied in closed form: cond_mean(i, r) returns
/// zbar_i given state r at the i-th coarse node.
ZbarResult zbar_analytic(const TimeGrid& fine, const Eigen::MatrixXd& z_fine,
                         const TimeGrid& coarse, const Eigen::MatrixXd& coarse_states,
                         const std::function<double(int, double)>& cond_mean,
                         int threads = 1);

} // namespace qgf
