#pragma once

#include <functional>

#include "qgf/market/market_model.hpp"

namespace qgf {

using StateFn = std::function<double(double, double, double)>; // (t, x, y) or (t, x, z)

/// Structured quadratic driver f(t,x,y,z) = l(t,x,y) + a(t,x,z) + (gamma/2) z^2
/// with a homogeneous of degree one in z. The structure allows the
/// exponential transform to cancel the quadratic term exactly.
///
/// Note the x-argument in a: the pricing driver's first-order part is
/// -rho theta(t,r) z, which depends on the state, so a carries (t,x,z).
/// The transform algebra only uses homogeneity in z and is unaffected.
struct QuadraticDriverSpec {
    StateFn l;    // Lipschitz part in (x, y)
    StateFn a;    // homogeneous degree one in z
    double gamma = 0.0;

    double operator()(double t, double x, double y, double z) const;
};

/// Builds a spec, verifying homogeneity of a by randomized sampling
/// (20 draws of (t, x, z, c)); throws ConfigError when it fails.
QuadraticDriverSpec make_quadratic_driver(StateFn l, StateFn a, double gamma,
                                          std::uint64_t check_seed = 0x5eedULL);

double eval_quadratic(const QuadraticDriverSpec& spec, double t, double x, double y,
                      double z);

/// The pricing driver: l = theta^2/(2 eta), a = -rho theta z,
/// gamma = -eta (1 - rho^2). Holds a copy of the model parameters.
QuadraticDriverSpec make_utility_driver(const MarketModel& model);

} // namespace qgf
