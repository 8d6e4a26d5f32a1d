#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qgf/market/payoff.hpp"
#include "qgf/market/simulate.hpp"
#include "qgf/pricing/indifference.hpp"

namespace qgf {

/// Resolved run configuration: the config file sections plus flag
/// overrides, validated before any simulation starts.
struct RunConfig {
    // [market]
    double mu = 0.12;
    double sigma = 0.41;
    double alpha = 0.1;
    double beta = 0.35;
    double rho = 0.5;
    double r0 = 170.0;
    double s0 = 173.0;
    double eta = 0.3;
    double horizon = 1.0;

    // [payoff]
    std::string payoff_kind = "put";
    double strike = 200.0;
    double cap = 0.0; // 0 = derive from the kind (puts: strike)

    // [numerics]
    int steps = 100;
    int paths = 70000;
    double tolerance = 1e-5;
    int max_iterations = 30;
    std::vector<int> basis_degrees = {0, 1, 2, 3, 4};
    std::string scheme = "picard-lsmc"; // or one-pass-backward
    std::string stepping = "exact";     // or euler
    int threads = 1;

    // [study]
    std::vector<double> rho_list = {0.2, 0.5, 0.7, 0.9};
    std::vector<int> refinements = {25, 50, 100, 200};
    std::vector<int> levels = {1, 2, 4, 8};
    std::vector<double> strikes = {160, 170, 180, 190, 200, 210, 220};
    std::vector<double> spots = {150, 160, 170, 180, 190, 200, 210};
    std::vector<int> scaling_spans = {1, 2, 4, 8};
    std::vector<int> scaling_powers = {2, 4};
    int study_paths = 4000;
    double path_strike = 180.0; // price/strategy path outputs
    bool regularity_solver_mode = false;

    // [seed]
    std::uint64_t seed = 20100828;
    std::uint64_t stream = 0;

    // [output]
    std::string out_dir = "out";
    int sim_paths = 8; // paths written by the simulate command

    MarketModel market() const;          // with rho from the market block
    MarketModel market_with(double correlation) const;
    PayoffSpec payoff() const;
    PayoffSpec payoff_with(double k) const;
    TimeGrid grid() const;
    SeedSpec seed_spec() const;
    SolverConfig solver() const;
    Stepping stepping_mode() const;

    /// Deterministic one-line dump of every resolved field.
    std::string canonical() const;
    std::uint64_t config_hash() const;
    /// The '# config=... seed=...' line carried by every produced CSV.
    std::string stamp() const;
};

} // namespace qgf
