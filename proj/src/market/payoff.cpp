#include "qgf/market/payoff.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace qgf {

double PayoffSpec::operator()(double x) const {
    switch (kind) {
        case Kind::put:
            return std::max(strike - x, 0.0);
        case Kind::call:
            return std::max(x - strike, 0.0);
        case Kind::table: {
            if (x <= table_x.front()) return table_y.front();
            if (x >= table_x.back()) return table_y.back();
            const auto it = std::upper_bound(table_x.begin(), table_x.end(), x);
            const auto i = static_cast<std::size_t>(it - table_x.begin());
            const double w = (x - table_x[i - 1]) / (table_x[i] - table_x[i - 1]);
            return (1.0 - w) * table_y[i - 1] + w * table_y[i];
        }
    }
    return 0.0;
}

double PayoffSpec::bound() const {
    if (kind == Kind::put) return cap.value_or(strike);
    if (!cap)
        throw ConfigError(
            "payoff: the terminal condition must be bounded; declare a finite cap "
            "(call payoffs are unbounded without one)");
    return *cap;
}

PayoffSpec make_put(double strike) {
    if (!(strike > 0.0)) throw ConfigError("payoff: strike must be positive");
    PayoffSpec p;
    p.kind = PayoffSpec::Kind::put;
    p.strike = strike;
    p.cap = strike;
    return p;
}

PayoffSpec make_call(double strike, double cap) {
    if (!(strike > 0.0)) throw ConfigError("payoff: strike must be positive");
    if (!(cap > 0.0) || !std::isfinite(cap))
        throw ConfigError("payoff: call payoffs require a finite positive cap");
    PayoffSpec p;
    p.kind = PayoffSpec::Kind::call;
    p.strike = strike;
    p.cap = cap;
    return p;
}

PayoffSpec make_table(std::vector<double> x, std::vector<double> y) {
    if (x.size() != y.size() || x.size() < 2)
        throw ConfigError("payoff: table needs matching x/y with at least two points");
    if (!std::is_sorted(x.begin(), x.end()))
        throw ConfigError("payoff: table abscissae must be ascending");
    PayoffSpec p;
    p.kind = PayoffSpec::Kind::table;
    double cap = 0.0;
    for (double v : y) cap = std::max(cap, std::abs(v));
    p.cap = cap;
    p.table_x = std::move(x);
    p.table_y = std::move(y);
    return p;
}

void validate(const PayoffSpec& payoff, const MarketModel& model,
              const ValidationLattice& lattice) {
    const double cap = payoff.bound();
    const double r_lo = lattice.state_lo_factor * model.r0;
    const double r_hi = lattice.state_hi_factor * model.r0;
    for (int j = 0; j < lattice.state_points; ++j) {
        const double r = r_lo + (r_hi - r_lo) * j / (lattice.state_points - 1);
        const double v = payoff(r);
        if (!(std::abs(v) <= cap))
            throw ConfigError("payoff: value " + std::to_string(v) + " at r=" +
                              std::to_string(r) + " exceeds the declared cap " +
                              std::to_string(cap));
    }
}

} // namespace qgf
