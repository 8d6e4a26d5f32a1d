#pragma once

#include "qgf/drivers/quadratic.hpp"

namespace qgf {

/// C^1 truncation of the identity at level n: identity on [-n, n],
/// quadratic splice on [n, n+2] and [-(n+2), -n], saturated at +-(n+1)
/// outside. Values satisfy |h_n(x)| <= min(|x|, n+1) and the slope stays
/// in [0, 1].
double truncate_scalar(int level, double x);

/// Derivative of truncate_scalar in x.
double truncate_scalar_slope(int level, double x);

/// The truncated driver f_n(t,x,y,z) = f(t,x,y,h_n(z)): globally Lipschitz
/// in z with the quadratic term bounded via |h_n| <= n+1.
QuadraticDriverSpec truncated_driver(const QuadraticDriverSpec& spec, int level);

} // namespace qgf
