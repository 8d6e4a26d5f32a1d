#include "qgf/core/path_batch.hpp"

#include "qgf/core/errors.hpp"

namespace qgf {

void PathBatch::check_shapes() const {
    const int n = grid.steps();
    if (states.cols() != n + 1)
        throw ConfigError("PathBatch: states must have steps+1 columns");
    if (dw1.rows() != states.rows() || dw2.rows() != states.rows())
        throw ConfigError("PathBatch: increment rows must match states");
    if (dw1.cols() != n || dw2.cols() != n)
        throw ConfigError("PathBatch: increments must have one column per step");
}

} // namespace qgf
