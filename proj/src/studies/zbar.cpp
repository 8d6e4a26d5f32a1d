#include "qgf/studies/zbar.hpp"

#include <cmath>

#include "qgf/core/math.hpp"
#include "qgf/core/parallel.hpp"

namespace qgf {

namespace {

int refinement_factor(const TimeGrid& fine, const TimeGrid& coarse) {
    if (fine.horizon() != coarse.horizon())
        throw ConfigError("zbar: fine and coarse grids must share the horizon");
    if (fine.steps() % coarse.steps() != 0)
        throw ConfigError("zbar: fine grid must refine the coarse grid");
    return fine.steps() / coarse.steps();
}

/// Trapezoid of (z - c)^2 over one coarse interval of the fine grid.
double interval_sq_dev(const Eigen::MatrixXd& z_fine, Eigen::Index path, int first,
                       int factor, double fine_mesh, double c) {
    double acc = 0.0;
    for (int j = 0; j <= factor; ++j) {
        const double d = z_fine(path, first + j) - c;
        const double w = (j == 0 || j == factor) ? 0.5 : 1.0;
        acc += w * d * d;
    }
    return acc * fine_mesh;
}

ZbarResult finish(const TimeGrid& fine, const Eigen::MatrixXd& z_fine,
                  const TimeGrid& coarse, Eigen::MatrixXd zbar, int threads) {
    const auto m = z_fine.rows();
    const int factor = fine.steps() / coarse.steps();
    const double fine_mesh = fine.mesh();
    const int nc = coarse.steps();

    Eigen::VectorXd per_path(m), per_path_left(m);
    parallel_blocks(m, threads, [&](std::ptrdiff_t, std::ptrdiff_t lo, std::ptrdiff_t hi) {
        for (std::ptrdiff_t p = lo; p < hi; ++p) {
            double acc = 0.0, acc_left = 0.0;
            for (int i = 0; i < nc; ++i) {
                const int first = i * factor;
                acc += interval_sq_dev(z_fine, p, first, factor, fine_mesh, zbar(p, i));
                acc_left += interval_sq_dev(z_fine, p, first, factor, fine_mesh,
                                            z_fine(p, first));
            }
            per_path(p) = acc;
            per_path_left(p) = acc_left;
        }
    });

    ZbarResult out;
    out.zbar = std::move(zbar);
    std::tie(out.statistic, out.statistic_se) = mean_and_stderr(per_path);
    std::tie(out.statistic_left, out.statistic_left_se) = mean_and_stderr(per_path_left);
    return out;
}

} // namespace

ZbarResult zbar_regression(const TimeGrid& fine, const Eigen::MatrixXd& z_fine,
                           const TimeGrid& coarse, const Eigen::MatrixXd& coarse_states,
                           const RegressionBasis& basis, int threads) {
    const int factor = refinement_factor(fine, coarse);
    const auto m = z_fine.rows();
    if (z_fine.cols() != fine.steps() + 1)
        throw ConfigError("zbar: need control values at every fine node");
    if (coarse_states.rows() != m || coarse_states.cols() < coarse.steps())
        throw ConfigError("zbar: coarse states do not match the control values");

    const int nc = coarse.steps();
    const double fine_mesh = fine.mesh();
    const double h = coarse.mesh();
    Eigen::MatrixXd zbar(m, nc);
    Eigen::VectorXd avg(m);
    for (int i = 0; i < nc; ++i) {
        const int first = i * factor;
        parallel_blocks(m, threads, [&](std::ptrdiff_t, std::ptrdiff_t lo, std::ptrdiff_t hi) {
            for (std::ptrdiff_t p = lo; p < hi; ++p) {
                double acc = 0.0;
                for (int j = 0; j <= factor; ++j) {
                    const double w = (j == 0 || j == factor) ? 0.5 : 1.0;
                    acc += w * z_fine(p, first + j);
                }
                avg(p) = acc * fine_mesh / h;
            }
        });
        zbar.col(i) = regress(avg, coarse_states.col(i), basis, threads).fitted;
    }
    return finish(fine, z_fine, coarse, std::move(zbar), threads);
}

ZbarResult zbar_analytic(const TimeGrid& fine, const Eigen::MatrixXd& z_fine,
                         const TimeGrid& coarse, const Eigen::MatrixXd& coarse_states,
                         const std::function<double(int, double)>& cond_mean,
                         int threads) {
    refinement_factor(fine, coarse);
    const auto m = z_fine.rows();
    if (z_fine.cols() != fine.steps() + 1)
        throw ConfigError("zbar: need control values at every fine node");
    const int nc = coarse.steps();
    Eigen::MatrixXd zbar(m, nc);
    parallel_blocks(m, threads, [&](std::ptrdiff_t, std::ptrdiff_t lo, std::ptrdiff_t hi) {
        for (std::ptrdiff_t p = lo; p < hi; ++p)
            for (int i = 0; i < nc; ++i) zbar(p, i) = cond_mean(i, coarse_states(p, i));
    });
    return finish(fine, z_fine, coarse, std::move(zbar), threads);
}

} // namespace qgf
