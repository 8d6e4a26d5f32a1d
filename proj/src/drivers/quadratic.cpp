#include "qgf/drivers/quadratic.hpp"

#include <cmath>
#include <string>

#include "qgf/core/random.hpp"

namespace qgf {

double QuadraticDriverSpec::operator()(double t, double x, double y, double z) const {
    return eval_quadratic(*this, t, x, y, z);
}

double eval_quadratic(const QuadraticDriverSpec& spec, double t, double x, double y,
                      double z) {
    const double v = spec.l(t, x, y) + spec.a(t, x, z) + 0.5 * spec.gamma * z * z;
    if (!std::isfinite(v))
        throw NumericalError("driver: non-finite value at t=" + std::to_string(t));
    return v;
}

QuadraticDriverSpec make_quadratic_driver(StateFn l, StateFn a, double gamma,
                                          std::uint64_t check_seed) {
    QuadraticDriverSpec spec{std::move(l), std::move(a), gamma};
    // Homogeneity a(t,x,cz) = c a(t,x,z) underpins the simplified transform;
    // check it on randomized samples before accepting the spec.
    const SeedSpec seed{check_seed, 0};
    for (int k = 0; k < 20; ++k) {
        const double t = uniform_draw(seed, k, 0, 0);
        const double x = 200.0 * uniform_draw(seed, k, 0, 1);
        const double z = 8.0 * (uniform_draw(seed, k, 0, 2) - 0.5);
        const double c = 4.0 * (uniform_draw(seed, k, 0, 3) - 0.5);
        const double lhs = spec.a(t, x, c * z);
        const double rhs = c * spec.a(t, x, z);
        const double scale = 1.0 + std::abs(rhs);
        if (std::abs(lhs - rhs) > 1e-9 * scale)
            throw ConfigError("driver: a(t,x,z) is not homogeneous of degree one in z");
    }
    return spec;
}

QuadraticDriverSpec make_utility_driver(const MarketModel& model) {
    const double eta = model.eta;
    const double rho = model.rho;
    if (eta == 0.0) throw ConfigError("utility driver: eta must be nonzero");
    auto l = [model, eta](double t, double r, double /*y*/) {
        const double th = theta(model, t, r);
        return th * th / (2.0 * eta);
    };
    auto a = [model, rho](double t, double r, double z) {
        return -z * rho * theta(model, t, r);
    };
    const double gamma = -eta * (1.0 - rho * rho);
    return make_quadratic_driver(std::move(l), std::move(a), gamma);
}

} // namespace qgf
