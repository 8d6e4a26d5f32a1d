#pragma once

#include <Eigen/Core>
#include <vector>

#include "qgf/core/math.hpp"
#include "qgf/core/time_grid.hpp"

namespace qgf {

/// Zero-driver case with closed-form value process used to measure path
/// regularity without solver noise: geometric index and a smooth bounded
/// terminal (a log-Gaussian bump), so Y_t = u(t, R_t) and
/// Z_t = sigma R_t du/dr with u the lognormal expectation of the terminal,
/// evaluated by Gauss-Hermite quadrature.
struct AnalyticCase {
    double mu = 0.12;
    double sigma = 0.41;
    double r0 = 170.0;
    double horizon = 1.0;
    double bump_center = 170.0;
    double bump_width = 0.4;
    double bump_height = 50.0;
    int quad_points = 64;

    double terminal(double x) const;
    double terminal_slope(double x) const;

    /// u(t, r) = E[g(R_T) | R_t = r].
    double value(double t, double r) const;
    /// du/dr by quadrature of g'(R_T) R_T / r.
    double value_slope(double t, double r) const;
    /// Z(t, r) = sigma r du/dr.
    double control(double t, double r) const;
};

/// Tabulated u and Z on a log-state grid per time node; turns the nested
/// quadratures of the regularity statistic into table lookups.
class ValueSurface {
public:
    ValueSurface(const AnalyticCase& cfg, const Eigen::VectorXd& times, double log_lo,
                 double log_hi, int grid_points = 2048, int threads = 1);

    double value_at(int time_index, double r) const;
    double control_at(int time_index, double r) const;
    const Eigen::VectorXd& times() const { return times_; }

private:
    double interpolate(const Eigen::VectorXd& table, double r) const;

    Eigen::VectorXd times_;
    double log_lo_, log_step_;
    int grid_points_;
    std::vector<Eigen::VectorXd> value_tables_;
    std::vector<Eigen::VectorXd> control_tables_;
};

} // namespace qgf
