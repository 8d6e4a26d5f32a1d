#include "qgf/studies/analytic_case.hpp"

#include <cmath>

#include "qgf/core/errors.hpp"
#include "qgf/core/parallel.hpp"

namespace qgf {

double AnalyticCase::terminal(double x) const {
    const double u = std::log(x / bump_center) / bump_width;
    return bump_height * std::exp(-0.5 * u * u);
}

double AnalyticCase::terminal_slope(double x) const {
    const double u = std::log(x / bump_center) / bump_width;
    return -terminal(x) * u / (bump_width * x);
}

namespace {

struct StepLaw {
    double drift; // (mu - sigma^2/2) tau
    double scale; // sigma sqrt(2 tau), matching the Gauss-Hermite weight
};

StepLaw step_law(const AnalyticCase& cfg, double tau) {
    return {(cfg.mu - 0.5 * cfg.sigma * cfg.sigma) * tau,
            cfg.sigma * std::sqrt(2.0 * tau)};
}

} // namespace

double AnalyticCase::value(double t, double r) const {
    const double tau = horizon - t;
    if (tau <= 0.0) return terminal(r);
    const auto law = step_law(*this, tau);
    const auto q = gauss_hermite(quad_points);
    double acc = 0.0;
    for (int k = 0; k < quad_points; ++k)
        acc += q.weights(k) * terminal(r * std::exp(law.drift + law.scale * q.nodes(k)));
    return acc / std::sqrt(M_PI);
}

double AnalyticCase::value_slope(double t, double r) const {
    const double tau = horizon - t;
    if (tau <= 0.0) return terminal_slope(r);
    const auto law = step_law(*this, tau);
    const auto q = gauss_hermite(quad_points);
    double acc = 0.0;
    for (int k = 0; k < quad_points; ++k) {
        const double x = r * std::exp(law.drift + law.scale * q.nodes(k));
        acc += q.weights(k) * terminal_slope(x) * x;
    }
    return acc / (std::sqrt(M_PI) * r);
}

double AnalyticCase::control(double t, double r) const {
    return sigma * r * value_slope(t, r);
}

ValueSurface::ValueSurface(const AnalyticCase& cfg, const Eigen::VectorXd& times,
                           double log_lo, double log_hi, int grid_points, int threads)
    : times_(times), log_lo_(log_lo), grid_points_(grid_points) {
    if (grid_points < 2) throw ConfigError("ValueSurface: need at least two grid points");
    if (!(log_hi > log_lo)) throw ConfigError("ValueSurface: empty state range");
    log_step_ = (log_hi - log_lo) / (grid_points - 1);
    const auto n_times = times.size();
    value_tables_.assign(n_times, Eigen::VectorXd(grid_points));
    control_tables_.assign(n_times, Eigen::VectorXd(grid_points));

    const auto quad = gauss_hermite(cfg.quad_points);
    const double inv_sqrt_pi = 1.0 / std::sqrt(M_PI);
    parallel_blocks(n_times, threads, [&](std::ptrdiff_t, std::ptrdiff_t lo, std::ptrdiff_t hi) {
        for (std::ptrdiff_t k = lo; k < hi; ++k) {
            const double tau = cfg.horizon - times_(k);
            auto& uvals = value_tables_[k];
            auto& zvals = control_tables_[k];
            if (tau <= 0.0) {
                for (int j = 0; j < grid_points_; ++j) {
                    const double r = std::exp(log_lo_ + j * log_step_);
                    uvals(j) = cfg.terminal(r);
                    zvals(j) = cfg.sigma * r * cfg.terminal_slope(r);
                }
                continue;
            }
            const auto law = step_law(cfg, tau);
            for (int j = 0; j < grid_points_; ++j) {
                const double r = std::exp(log_lo_ + j * log_step_);
                double acc_u = 0.0, acc_z = 0.0;
                for (int i = 0; i < cfg.quad_points; ++i) {
                    const double x = r * std::exp(law.drift + law.scale * quad.nodes(i));
                    acc_u += quad.weights(i) * cfg.terminal(x);
                    acc_z += quad.weights(i) * cfg.terminal_slope(x) * x;
                }
                uvals(j) = acc_u * inv_sqrt_pi;
                zvals(j) = cfg.sigma * acc_z * inv_sqrt_pi;
            }
        }
    }, /*block=*/1);
}

double ValueSurface::interpolate(const Eigen::VectorXd& table, double r) const {
    const double pos = (std::log(r) - log_lo_) / log_step_;
    if (pos <= 0.0) return table(0);
    if (pos >= grid_points_ - 1) return table(grid_points_ - 1);
    const int j = static_cast<int>(pos);
    const double w = pos - j;
    return (1.0 - w) * table(j) + w * table(j + 1);
}

double ValueSurface::value_at(int time_index, double r) const {
    return interpolate(value_tables_[time_index], r);
}

double ValueSurface::control_at(int time_index, double r) const {
    return interpolate(control_tables_[time_index], r);
}

} // namespace qgf
