#pragma once

#include <Eigen/Core>
#include <cstdint>
#include <utility>

namespace qgf {

/// Standard normal cumulative distribution function.
double norm_cdf(double x);

/// Inverse of the standard normal cdf, accurate to a few ulps
/// (rational approximation refined by one Halley step on erfc).
double norm_cdf_inv(double p);

/// SplitMix64 finalizer; the mixing primitive of the counter-based RNG.
std::uint64_t mix64(std::uint64_t z);

struct Quadrature {
    Eigen::VectorXd nodes;
    Eigen::VectorXd weights;
};

/// Gauss-Hermite rule for integrals of the form
/// integral f(x) exp(-x^2) dx, computed by Golub-Welsch.
Quadrature gauss_hermite(int n);

/// Gauss-Legendre rule on [a, b].
Quadrature gauss_legendre(int n, double a, double b);

struct LineFit {
    double slope = 0.0;
    double slope_stderr = 0.0;
    double intercept = 0.0;
};

/// Ordinary least squares line fit y ~ a + b x with the usual slope
/// standard error (n >= 3 for a finite stderr).
LineFit fit_line(const Eigen::VectorXd& x, const Eigen::VectorXd& y);

/// Mean and standard error of the mean of a sample.
std::pair<double, double> mean_and_stderr(const Eigen::VectorXd& sample);

} // namespace qgf
