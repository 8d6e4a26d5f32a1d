#include "qgf/market/market_model.hpp"

#include <cmath>
#include <string>

namespace qgf {

double theta(const MarketModel& model, double t, double r) {
    const double beta = model.asset_vol(t, r);
    if (beta == 0.0) throw DomainError("theta: asset volatility vanishes");
    return model.asset_drift(t, r) / beta;
}

void validate(const MarketModel& model, const ValidationLattice& lattice) {
    if (!(model.r0 > 0.0)) throw ConfigError("market: index spot r0 must be positive");
    if (!(model.s0 > 0.0)) throw ConfigError("market: asset spot s0 must be positive");
    if (!(std::abs(model.rho) <= 1.0))
        throw ConfigError("market: correlation must lie in [-1, 1], got " +
                          std::to_string(model.rho));
    if (model.eta == 0.0) throw ConfigError("market: risk aversion eta must be nonzero");
    if (!(model.horizon > 0.0)) throw ConfigError("market: horizon must be positive");

    const double r_lo = lattice.state_lo_factor * model.r0;
    const double r_hi = lattice.state_hi_factor * model.r0;
    for (int i = 0; i < lattice.time_points; ++i) {
        const double t = model.horizon * i / (lattice.time_points - 1);
        for (int j = 0; j < lattice.state_points; ++j) {
            const double r = r_lo + (r_hi - r_lo) * j / (lattice.state_points - 1);
            const double beta = model.asset_vol(t, r);
            if (!(beta * beta >= lattice.min_beta_sq))
                throw ConfigError("market: beta^2 < ellipticity floor at (t=" +
                                  std::to_string(t) + ", r=" + std::to_string(r) + ")");
            const double th = model.asset_drift(t, r) / beta;
            if (!std::isfinite(th))
                throw ConfigError("market: theta unbounded at (t=" + std::to_string(t) +
                                  ", r=" + std::to_string(r) + ")");
            if (!std::isfinite(model.index_drift(t, r)) ||
                !std::isfinite(model.index_vol(t, r)))
                throw ConfigError("market: index coefficients not finite on lattice");
        }
    }
}

} // namespace qgf
