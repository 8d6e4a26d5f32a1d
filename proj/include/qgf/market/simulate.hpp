#pragma once

#include "qgf/core/path_batch.hpp"
#include "qgf/market/market_model.hpp"

namespace qgf {

enum class Stepping {
    exact, // lognormal step, available for the geometric/constant instances
    euler,
};

/// Simulates the non-tradable index R over the grid, consuming only dW1.
/// Exact stepping requires the geometric instance.
PathBatch simulate_index(const MarketModel& model, const TimeGrid& grid, int paths,
                         const SeedSpec& seed, Stepping stepping = Stepping::exact,
                         int threads = 1);

/// Simulates the tradable asset S on the increments of an index batch,
/// using dW3 = rho dW1 + sqrt(1-rho^2) dW2.
Eigen::MatrixXd simulate_asset(const MarketModel& model, const PathBatch& index,
                               Stepping stepping = Stepping::exact, int threads = 1);

} // namespace qgf
