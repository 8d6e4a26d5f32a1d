#pragma once

#include <vector>

#include "qgf/core/math.hpp"
#include "qgf/core/random.hpp"
#include "qgf/studies/analytic_case.hpp"

namespace qgf {

struct RegularityRow {
    int steps = 0;
    double mesh = 0.0;
    double y_stat = 0.0; // max_i sup_t E|Y_t - Y_{t_i}|^2
    double y_stat_se = 0.0;
    double z_stat = 0.0; // sum_i E int (Z - zbar_i)^2
    double z_stat_se = 0.0;
    double z_stat_left = 0.0; // zbar replaced by the left endpoint
    double z_stat_left_se = 0.0;
};

struct RegularityReport {
    std::vector<RegularityRow> rows;
    LineFit y_slope; // log statistic vs log mesh
    LineFit z_slope;
    bool zbar_never_worse = true; // statistic <= left-endpoint statistic per row
};

struct RegularityOptions {
    int fine_factor = 8;        // master sub-steps per finest coarse step
    int surface_points = 2048;  // log-state table resolution
    int outer_quad_points = 48; // conditional-mean quadrature
    int threads = 1;
};

/// Measures the path-regularity statistics of the analytic case on a nested
/// family of equidistant grids sharing one master simulation: both
/// statistics decay like the mesh, so the fitted log-log slopes sit near 1.
RegularityReport regularity_study(const AnalyticCase& cfg,
                                  const std::vector<int>& refinements, int paths,
                                  const SeedSpec& seed, const RegularityOptions& opts = {});

/// Solver-mode variant: the control process comes from an LSMC solve of the
/// zero-driver equation on the master grid and the conditional expectation
/// from cross-sectional regression. The Monte Carlo regression noise of
/// order 1/sqrt(paths) enters the statistic, so rate measurements need far
/// more paths than the analytic mode; kept behind this separate entry point.
RegularityReport regularity_study_solver_mode(const AnalyticCase& cfg,
                                              const std::vector<int>& refinements,
                                              int paths, const SeedSpec& seed,
                                              const RegularityOptions& opts = {});

} // namespace qgf
