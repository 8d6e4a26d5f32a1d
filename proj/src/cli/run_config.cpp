#include "qgf/cli/run_config.hpp"

#include <sstream>

#include "qgf/io/csv.hpp"

namespace qgf {

MarketModel RunConfig::market() const { return market_with(rho); }

MarketModel RunConfig::market_with(double correlation) const {
    MarketModel m;
    m.mu_bar = mu;
    m.sigma_bar = sigma;
    m.alpha_bar = alpha;
    m.beta_bar = beta;
    m.rho = correlation;
    m.r0 = r0;
    m.s0 = s0;
    m.eta = eta;
    m.horizon = horizon;
    return m;
}

PayoffSpec RunConfig::payoff() const { return payoff_with(strike); }

PayoffSpec RunConfig::payoff_with(double k) const {
    if (payoff_kind == "put") {
        PayoffSpec p = make_put(k);
        if (cap > 0.0) p.cap = cap;
        return p;
    }
    if (payoff_kind == "call") {
        if (!(cap > 0.0))
            throw ConfigError("config: call payoffs need a positive payoff.cap");
        return make_call(k, cap);
    }
    throw ConfigError("config: unknown payoff kind '" + payoff_kind +
                      "' (expected put or call; tables are library-only)");
}

TimeGrid RunConfig::grid() const { return build_grid(horizon, steps); }

SeedSpec RunConfig::seed_spec() const { return {seed, stream}; }

SolverConfig RunConfig::solver() const {
    SolverConfig cfg;
    cfg.tolerance = tolerance;
    cfg.max_iterations = max_iterations;
    cfg.threads = threads;
    cfg.basis.degrees = basis_degrees;
    if (scheme == "picard-lsmc")
        cfg.scheme = SolverConfig::Scheme::picard_lsmc;
    else if (scheme == "one-pass-backward")
        cfg.scheme = SolverConfig::Scheme::one_pass_backward;
    else
        throw ConfigError("config: unknown scheme '" + scheme +
                          "' (expected picard-lsmc or one-pass-backward)");
    return cfg;
}

Stepping RunConfig::stepping_mode() const {
    if (stepping == "exact") return Stepping::exact;
    if (stepping == "euler") return Stepping::euler;
    throw ConfigError("config: unknown stepping '" + stepping +
                      "' (expected exact or euler)");
}

namespace {

template <typename T>
void put(std::ostringstream& s, const char* key, const T& v) {
    s << key << '=' << v << ';';
}

template <typename T>
void put_list(std::ostringstream& s, const char* key, const std::vector<T>& v) {
    s << key << '=';
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s << ',';
        s << v[i];
    }
    s << ';';
}

} // namespace

std::string RunConfig::canonical() const {
    std::ostringstream s;
    s.precision(17);
    put(s, "mu", mu);
    put(s, "sigma", sigma);
    put(s, "alpha", alpha);
    put(s, "beta", beta);
    put(s, "rho", rho);
    put(s, "r0", r0);
    put(s, "s0", s0);
    put(s, "eta", eta);
    put(s, "horizon", horizon);
    put(s, "payoff", payoff_kind);
    put(s, "strike", strike);
    put(s, "cap", cap);
    put(s, "steps", steps);
    put(s, "paths", paths);
    put(s, "tolerance", tolerance);
    put(s, "max_iterations", max_iterations);
    put_list(s, "basis_degrees", basis_degrees);
    put(s, "scheme", scheme);
    put(s, "stepping", stepping);
    put_list(s, "rho_list", rho_list);
    put_list(s, "refinements", refinements);
    put_list(s, "levels", levels);
    put_list(s, "strikes", strikes);
    put_list(s, "spots", spots);
    put_list(s, "scaling_spans", scaling_spans);
    put_list(s, "scaling_powers", scaling_powers);
    put(s, "study_paths", study_paths);
    put(s, "path_strike", path_strike);
    put(s, "regularity_solver_mode", regularity_solver_mode);
    put(s, "seed", seed);
    put(s, "stream", stream);
    put(s, "sim_paths", sim_paths);
    return s.str();
}

std::uint64_t RunConfig::config_hash() const { return fnv1a_hash(canonical()); }

std::string RunConfig::stamp() const {
    std::ostringstream s;
    s << "config=" << std::hex << config_hash() << std::dec << " seed=" << seed
      << " stream=" << stream;
    return s.str();
}

} // namespace qgf
