#include "qgf/core/time_grid.hpp"

#include <cmath>
#include <string>

namespace qgf {

TimeGrid::TimeGrid(double horizon, int steps) : horizon_(horizon), steps_(steps) {
    if (!(horizon > 0.0) || !std::isfinite(horizon))
        throw ConfigError("TimeGrid: horizon must be positive and finite, got " +
                          std::to_string(horizon));
    if (steps < 1)
        throw ConfigError("TimeGrid: need at least one step, got " + std::to_string(steps));
}

Eigen::VectorXd TimeGrid::nodes() const {
    Eigen::VectorXd t(steps_ + 1);
    for (int i = 0; i <= steps_; ++i) t(i) = node(i);
    return t;
}

TimeGrid build_grid(double horizon, int steps) { return TimeGrid(horizon, steps); }

} // namespace qgf
