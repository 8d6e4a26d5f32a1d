#include "qgf/drivers/truncation.hpp"

#include <string>

namespace qgf {

double truncate_scalar(int level, double x) {
    if (level < 1) throw ConfigError("truncation: level must be >= 1");
    const double n = level;
    if (x > n + 2.0) return n + 1.0;
    if (x >= n) return (-n * n + 2.0 * n * x - x * (x - 4.0)) / 4.0;
    if (x >= -n) return x;
    if (x >= -(n + 2.0)) return (n * n + 2.0 * n * x + x * (x + 4.0)) / 4.0;
    return -(n + 1.0);
}

double truncate_scalar_slope(int level, double x) {
    if (level < 1) throw ConfigError("truncation: level must be >= 1");
    const double n = level;
    if (x > n + 2.0 || x < -(n + 2.0)) return 0.0;
    if (x >= n) return (2.0 * n - 2.0 * x + 4.0) / 4.0;
    if (x >= -n) return 1.0;
    return (2.0 * n + 2.0 * x + 4.0) / 4.0;
}

QuadraticDriverSpec truncated_driver(const QuadraticDriverSpec& spec, int level) {
    if (level < 1) throw ConfigError("truncation: level must be >= 1");
    QuadraticDriverSpec out;
    out.gamma = 0.0; // the z-dependence is folded into a below
    out.l = spec.l;
    const double gamma = spec.gamma;
    auto a = spec.a;
    out.a = [a, gamma, level](double t, double x, double z) {
        const double hz = truncate_scalar(level, z);
        return a(t, x, hz) + 0.5 * gamma * hz * hz;
    };
    return out;
}

} // namespace qgf
