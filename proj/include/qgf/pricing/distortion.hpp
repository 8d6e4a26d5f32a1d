#pragma once

#include <utility>

#include "qgf/core/random.hpp"
#include "qgf/market/payoff.hpp"

namespace qgf {

/// Independent closed-form reduction of the time-zero indifference price
/// for constant market price of risk and geometric index:
///   p_0 = (1/gamma) log E[exp(gamma F(R~_T))],  gamma = -eta (1 - rho^2),
/// where R~ carries the drift mu - rho theta sigma (the measure change that
/// absorbs the first-order driver term). Terminal values are sampled in one
/// lognormal shot; the standard error comes from the delta method on the
/// log of the Monte Carlo mean. For |rho| = 1 the formula degenerates to
/// the plain expectation under the shifted drift.
std::pair<double, double> distortion_oracle(const MarketModel& model,
                                            const PayoffSpec& payoff, int samples,
                                            const SeedSpec& seed);

} // namespace qgf
