#include "qgf/core/math.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>

#include "qgf/core/errors.hpp"

namespace qgf {

double norm_cdf(double x) {
    return 0.5 * std::erfc(-x / std::sqrt(2.0));
}

namespace {

// Acklam's rational approximation of the normal quantile, |error| < 1.2e-9
// before refinement.
double norm_cdf_inv_approx(double p) {
    static constexpr double a[] = {-3.969683028665376e+01, 2.209460984245205e+02,
                                   -2.759285104469687e+02, 1.383577518672690e+02,
                                   -3.066479806614716e+01, 2.506628277459239e+00};
    static constexpr double b[] = {-5.447609879822406e+01, 1.615858368580409e+02,
                                   -1.556989798598866e+02, 6.680131188771972e+01,
                                   -1.328068155288572e+01};
    static constexpr double c[] = {-7.784894002430293e-03, -3.223964580411365e-01,
                                   -2.400758277161838e+00, -2.549732539343734e+00,
                                   4.374664141464968e+00,  2.938163982698783e+00};
    static constexpr double d[] = {7.784695709041462e-03, 3.224671290700398e-01,
                                   2.445134137142996e+00, 3.754408661907416e+00};
    static constexpr double plow = 0.02425;

    if (p < plow) {
        const double q = std::sqrt(-2.0 * std::log(p));
        return (((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
               ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
    }
    if (p > 1.0 - plow) {
        const double q = std::sqrt(-2.0 * std::log(1.0 - p));
        return -(((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
               ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
    }
    const double q = p - 0.5;
    const double r = q * q;
    return (((((a[0] * r + a[1]) * r + a[2]) * r + a[3]) * r + a[4]) * r + a[5]) * q /
           (((((b[0] * r + b[1]) * r + b[2]) * r + b[3]) * r + b[4]) * r + 1.0);
}

} // namespace

double norm_cdf_inv(double p) {
    if (!(p > 0.0 && p < 1.0)) throw DomainError("norm_cdf_inv: p must lie in (0, 1)");
    double x = norm_cdf_inv_approx(p);
    // One Halley step against the exact cdf brings the result to a few ulps.
    static const double inv_sqrt2pi = 0.3989422804014326779399461;
    const double e = norm_cdf(x) - p;
    const double u = e / (inv_sqrt2pi * std::exp(-0.5 * x * x));
    x -= u / (1.0 + 0.5 * x * u);
    return x;
}

std::uint64_t mix64(std::uint64_t z) {
    z += 0x9E3779B97F4A7C15ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

Quadrature gauss_hermite(int n) {
    if (n < 1) throw ConfigError("gauss_hermite: need at least one node");
    Eigen::MatrixXd jacobi = Eigen::MatrixXd::Zero(n, n);
    for (int k = 1; k < n; ++k) {
        const double off = std::sqrt(k / 2.0);
        jacobi(k, k - 1) = off;
        jacobi(k - 1, k) = off;
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(jacobi);
    Quadrature q;
    q.nodes = es.eigenvalues();
    q.weights.resize(n);
    const double sqrt_pi = std::sqrt(M_PI);
    for (int k = 0; k < n; ++k) {
        const double v0 = es.eigenvectors()(0, k);
        q.weights(k) = sqrt_pi * v0 * v0;
    }
    return q;
}

Quadrature gauss_legendre(int n, double a, double b) {
    if (n < 1) throw ConfigError("gauss_legendre: need at least one node");
    Eigen::MatrixXd jacobi = Eigen::MatrixXd::Zero(n, n);
    for (int k = 1; k < n; ++k) {
        const double off = k / std::sqrt(4.0 * k * k - 1.0);
        jacobi(k, k - 1) = off;
        jacobi(k - 1, k) = off;
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(jacobi);
    Quadrature q;
    q.nodes.resize(n);
    q.weights.resize(n);
    for (int k = 0; k < n; ++k) {
        const double x = es.eigenvalues()(k); // node on [-1, 1]
        const double v0 = es.eigenvectors()(0, k);
        q.nodes(k) = 0.5 * (a + b) + 0.5 * (b - a) * x;
        q.weights(k) = (b - a) * v0 * v0;
    }
    return q;
}

LineFit fit_line(const Eigen::VectorXd& x, const Eigen::VectorXd& y) {
    const auto n = x.size();
    if (n != y.size() || n < 2) throw ConfigError("fit_line: need matching samples, n >= 2");
    const double xm = x.mean();
    const double ym = y.mean();
    const double sxx = (x.array() - xm).square().sum();
    if (sxx <= 0.0) throw ConfigError("fit_line: degenerate abscissae");
    const double sxy = ((x.array() - xm) * (y.array() - ym)).sum();
    LineFit fit;
    fit.slope = sxy / sxx;
    fit.intercept = ym - fit.slope * xm;
    if (n > 2) {
        const double ss_res =
            (y.array() - fit.intercept - fit.slope * x.array()).square().sum();
        fit.slope_stderr = std::sqrt(ss_res / ((n - 2) * sxx));
    }
    return fit;
}

std::pair<double, double> mean_and_stderr(const Eigen::VectorXd& sample) {
    const auto n = sample.size();
    if (n < 2) throw ConfigError("mean_and_stderr: need at least two samples");
    const double m = sample.mean();
    const double var = (sample.array() - m).square().sum() / (n - 1);
    return {m, std::sqrt(var / n)};
}

} // namespace qgf
