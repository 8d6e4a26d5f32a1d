#pragma once

#include <optional>
#include <vector>

#include "qgf/market/market_model.hpp"

namespace qgf {

/// European payoff F(R_T) with a declared bound. The theory requires a
/// bounded terminal condition, so every payoff carries a cap; puts get
/// cap = K automatically, calls and tables must declare a finite one
/// (tables derive it from their values).
struct PayoffSpec {
    enum class Kind { put, call, table };

    Kind kind = Kind::put;
    double strike = 200.0;
    std::optional<double> cap; // bound on |F|
    std::vector<double> table_x, table_y; // for Kind::table, x ascending

    double operator()(double x) const;
    double bound() const; // resolved cap, throws if undeclared
};

PayoffSpec make_put(double strike);
PayoffSpec make_call(double strike, double cap);
PayoffSpec make_table(std::vector<double> x, std::vector<double> y);

/// Verifies the payoff respects its declared cap on the validation lattice.
void validate(const PayoffSpec& payoff, const MarketModel& model,
              const ValidationLattice& lattice = {});

} // namespace qgf
