#pragma once

#include <vector>

#include "qgf/core/math.hpp"
#include "qgf/market/simulate.hpp"

namespace qgf {

struct ScalingRow {
    double span = 0.0;
    double moment = 0.0; // E[ sup_{u <= span} |R_u - R_0|^p ]
    double moment_se = 0.0;
};

struct ScalingReport {
    int power = 2;
    std::vector<ScalingRow> rows;
    LineFit slope; // log moment vs log span, expected near p/2
};

/// Fits the span-scaling of running-supremum increment moments of the
/// index: E[sup |R_u - R_0|^p] over spans of 1, 2, 4, ... grid steps.
ScalingReport sde_scaling_study(const MarketModel& model, const TimeGrid& grid,
                                const std::vector<int>& span_steps, int power, int paths,
                                const SeedSpec& seed, int threads = 1);

} // namespace qgf
