#pragma once

#include <string>

#include "qgf/cli/run_config.hpp"

namespace qgf {

inline constexpr int kExitOk = 0;
inline constexpr int kExitConfig = 2;
inline constexpr int kExitNumerical = 3;
inline constexpr int kExitStudyCheck = 4;

/// Writes paths.csv: simulated index and asset paths per correlation level.
int cmd_simulate(const RunConfig& cfg);

/// Writes the pricing outputs: strike_sweep.csv, spot_sweep.csv,
/// price_path.csv and strategy_path.csv across the correlation list.
int cmd_price(const RunConfig& cfg);

/// Runs one study ("regularity", "truncation" or "sde-scaling"), writes its
/// CSV and returns kExitStudyCheck when an invariant flag fails.
int cmd_study(const RunConfig& cfg, const std::string& which);

} // namespace qgf
