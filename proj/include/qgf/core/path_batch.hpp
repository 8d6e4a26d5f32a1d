#pragma once

#include <Eigen/Core>

#include "qgf/core/random.hpp"
#include "qgf/core/time_grid.hpp"

namespace qgf {

/// Simulated forward states together with the Brownian increments that
/// generated them. Immutable after construction and safe to share.
struct PathBatch {
    TimeGrid grid{1.0, 1};
    Eigen::MatrixXd states; // paths x (steps + 1); column 0 is the spot
    Eigen::MatrixXd dw1;    // paths x steps
    Eigen::MatrixXd dw2;    // paths x steps

    int paths() const { return static_cast<int>(states.rows()); }
    int steps() const { return grid.steps(); }

    /// Consistency of the matrix shapes with the grid.
    void check_shapes() const;
};

} // namespace qgf
