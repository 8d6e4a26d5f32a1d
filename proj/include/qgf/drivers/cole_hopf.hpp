#pragma once

#include <functional>
#include <utility>

#include "qgf/drivers/quadratic.hpp"

namespace qgf {

/// Exponential transform p = exp(gamma y), q = gamma p z. Requires gamma != 0.
std::pair<double, double> cole_hopf_forward(double gamma, double y, double z);

/// Inverse transform y = log(p)/gamma, z = q/(gamma p). Requires p > 0.
std::pair<double, double> cole_hopf_inverse(double gamma, double p, double q);

/// Driver of the transformed equation, F(t,x,p,q) = gamma p l(t,x,log(p)/gamma)
/// + a(t,x,q): linear growth, globally Lipschitz for p on a compact set
/// away from zero. Carries the feasible p-range and a sampled Lipschitz
/// certificate.
struct LipschitzDriver {
    std::function<double(double, double, double, double)> f; // (t, x, p, q)
    double p_floor = 0.0;   // delta: evaluations below raise DomainError
    double p_ceiling = 0.0; // upper clamp for regression estimates

    // Sampled max difference quotients on the certificate lattice.
    double lipschitz_x = 0.0;
    double lipschitz_p = 0.0;
    double lipschitz_q = 0.0;
    double growth_constant = 0.0; // C with |F| <= C (1 + |x| + |p| + |q|)

    double operator()(double t, double x, double p, double q) const;
};

struct TransformOptions {
    double payoff_cap = 0.0;       // bound on |g|
    double horizon = 1.0;          // T, for the value bound
    double state_lo = 0.0;         // certificate lattice in x
    double state_hi = 1.0;
    int lattice_points = 17;
};

/// Builds the transformed driver for a structured quadratic spec. The
/// feasible p-range [delta, p_max] is derived from the payoff cap and the
/// driver bound: |Y| <= cap + T sup|l|, delta = exp(-|gamma| bound).
LipschitzDriver transformed_driver(const QuadraticDriverSpec& spec,
                                   const TransformOptions& opts);

} // namespace qgf
