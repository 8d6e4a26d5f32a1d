#include "qgf/drivers/cole_hopf.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace qgf {

std::pair<double, double> cole_hopf_forward(double gamma, double y, double z) {
    if (gamma == 0.0) throw ConfigError("cole_hopf_forward: gamma must be nonzero");
    const double p = std::exp(gamma * y);
    return {p, gamma * p * z};
}

std::pair<double, double> cole_hopf_inverse(double gamma, double p, double q) {
    if (gamma == 0.0) throw ConfigError("cole_hopf_inverse: gamma must be nonzero");
    if (!(p > 0.0))
        throw DomainError("cole_hopf_inverse: p must be positive, got " + std::to_string(p));
    return {std::log(p) / gamma, q / (gamma * p)};
}

double LipschitzDriver::operator()(double t, double x, double p, double q) const {
    if (!(p >= p_floor))
        throw DomainError("transformed driver: p=" + std::to_string(p) +
                          " below the feasible floor " + std::to_string(p_floor));
    return f(t, x, p, q);
}

LipschitzDriver transformed_driver(const QuadraticDriverSpec& spec,
                                   const TransformOptions& opts) {
    const double gamma = spec.gamma;
    if (gamma == 0.0)
        throw ConfigError("transformed_driver: gamma must be nonzero; solve the driver "
                          "directly when the quadratic term vanishes");

    LipschitzDriver drv;

    // Value bound |Y| <= cap + T sup|l| on the lattice gives the compact
    // p-range the transform is valid on.
    double l_sup = 0.0;
    const int pts = std::max(2, opts.lattice_points);
    for (int i = 0; i < pts; ++i) {
        const double t = opts.horizon * i / (pts - 1);
        for (int j = 0; j < pts; ++j) {
            const double x = opts.state_lo + (opts.state_hi - opts.state_lo) * j / (pts - 1);
            l_sup = std::max(l_sup, std::abs(spec.l(t, x, 0.0)));
        }
    }
    const double y_bound = opts.payoff_cap + opts.horizon * l_sup;
    drv.p_floor = std::exp(-std::abs(gamma) * y_bound);
    drv.p_ceiling = std::exp(std::abs(gamma) * y_bound);

    auto l = spec.l;
    auto a = spec.a;
    drv.f = [l, a, gamma](double t, double x, double p, double q) {
        return gamma * p * l(t, x, std::log(p) / gamma) + a(t, x, q);
    };

    // Sampled Lipschitz/growth certificate. The structural form
    // F = gamma p l(t,x,log(p)/gamma) + a(t,x,q) lets each slope be sampled
    // from its own part; naive differences of F itself would cancel
    // catastrophically at the exponential extremes of the p-range.
    const double p_lo = drv.p_floor;
    const double p_hi = drv.p_ceiling;
    const double dq = 0.5;
    double lip_lx = 0.0, lip_ax = 0.0, lip_p = 0.0, lip_q = 0.0, growth = 0.0;
    for (int i = 0; i < pts; ++i) {
        const double t = opts.horizon * i / (pts - 1);
        for (int j = 0; j < pts; ++j) {
            const double x = opts.state_lo + (opts.state_hi - opts.state_lo) * j / (pts - 1);
            const double dx = std::max(1e-4, 1e-4 * std::abs(x));
            for (double q : {-1.0, 0.0, 1.0}) {
                lip_ax = std::max(lip_ax, std::abs(a(t, x + dx, q) - a(t, x, q)) / dx);
                lip_q = std::max(lip_q, std::abs(a(t, x, q + dq) - a(t, x, q)) / dq);
            }
            for (int k = 0; k < pts; ++k) {
                const double w = static_cast<double>(k) / (pts - 1);
                const double p = p_lo * std::pow(p_hi / p_lo, w);
                const double dp = std::max(1e-12 * p, 1e-4 * p);
                const double l0 = l(t, x, std::log(p) / gamma);
                const double l1 = l(t, x, std::log(p + dp) / gamma);
                // d/dp of gamma p l: gamma (l1 + p (l1 - l0) / dp), cancellation-free
                lip_p = std::max(lip_p,
                                 std::abs(gamma) * std::abs(l1 + p * (l1 - l0) / dp));
                lip_lx = std::max(
                    lip_lx, std::abs(gamma) * p *
                                std::abs(l(t, x + dx, std::log(p) / gamma) - l0) / dx);
                growth = std::max(growth, std::abs(gamma * p * l0 + a(t, x, 1.0)) /
                                              (1.0 + std::abs(x) + p + 1.0));
            }
        }
    }
    drv.lipschitz_x = lip_lx + lip_ax;
    drv.lipschitz_p = lip_p;
    drv.lipschitz_q = lip_q;
    drv.growth_constant = growth;
    if (!std::isfinite(drv.lipschitz_x) || !std::isfinite(lip_p) || !std::isfinite(lip_q))
        throw NumericalError("transformed_driver: Lipschitz certificate not finite");
    return drv;
}

} // namespace qgf
