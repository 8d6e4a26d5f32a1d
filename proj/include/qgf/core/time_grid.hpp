#pragma once

#include <Eigen/Core>

#include "qgf/core/errors.hpp"

namespace qgf {

/// Equidistant partition of [0, T] with N steps. Nodes are computed as
/// i*T/N rather than by accumulation, so there is no roundoff drift and
/// every interior step equals the mesh T/N to within one ulp.
class TimeGrid {
public:
    TimeGrid(double horizon, int steps);

    double horizon() const { return horizon_; }
    int steps() const { return steps_; }
    int nodes_count() const { return steps_ + 1; }

    /// Constant mesh h = T/N.
    double mesh() const { return horizon_ / steps_; }

    double node(int i) const {
        if (i == steps_) return horizon_; // pin t_N = T exactly
        return static_cast<double>(i) * horizon_ / steps_;
    }

    Eigen::VectorXd nodes() const;

    bool operator==(const TimeGrid& other) const {
        return horizon_ == other.horizon_ && steps_ == other.steps_;
    }

private:
    double horizon_;
    int steps_;
};

TimeGrid build_grid(double horizon, int steps);

} // namespace qgf
