#pragma once

#include <functional>
#include <string>
#include <vector>

#include "qgf/core/time_grid.hpp"

namespace qgf {

using Coefficient = std::function<double(double, double)>; // (t, r)

/// Two-asset market: a non-tradable index R driven by W1 and a tradable
/// asset S driven by W3 = rho W1 + sqrt(1-rho^2) W2. The default instance
/// is the geometric one (mu_bar * r, sigma_bar * r index; constant
/// alpha_bar, beta_bar asset), for which exact lognormal stepping applies.
/// Custom coefficients switch the simulators to Euler-Maruyama.
struct MarketModel {
    double mu_bar = 0.12;
    double sigma_bar = 0.41;
    double alpha_bar = 0.1;
    double beta_bar = 0.35;
    double rho = 0.5;
    double r0 = 170.0;
    double s0 = 173.0;
    double eta = 0.3; // risk aversion, nonzero
    double horizon = 1.0;

    // Optional general coefficients; when set the model is non-geometric.
    Coefficient mu_fn, sigma_fn, alpha_fn, beta_fn;

    bool geometric_index() const { return !mu_fn && !sigma_fn; }
    bool constant_asset() const { return !alpha_fn && !beta_fn; }

    double index_drift(double t, double r) const {
        return mu_fn ? mu_fn(t, r) : mu_bar * r;
    }
    double index_vol(double t, double r) const {
        return sigma_fn ? sigma_fn(t, r) : sigma_bar * r;
    }
    double asset_drift(double t, double r) const {
        return alpha_fn ? alpha_fn(t, r) : alpha_bar;
    }
    double asset_vol(double t, double r) const {
        return beta_fn ? beta_fn(t, r) : beta_bar;
    }
};

/// Market price of risk theta = alpha / beta.
double theta(const MarketModel& model, double t, double r);

struct ValidationLattice {
    int time_points = 21;
    int state_points = 21;
    double state_lo_factor = 0.25; // lattice spans [r0/4, 4 r0] by default
    double state_hi_factor = 4.0;
    double min_beta_sq = 1e-8; // uniform ellipticity floor for beta^2
};

/// Checks the standing assumptions on a numeric lattice: |rho| <= 1,
/// positive spots, nonzero risk aversion, beta^2 bounded away from zero
/// and theta bounded. Throws ConfigError with a description on failure.
void validate(const MarketModel& model, const ValidationLattice& lattice = {});

} // namespace qgf
