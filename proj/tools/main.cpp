#include <CLI11.hpp>
#include <iostream>

#include "qgf/cli/commands.hpp"

namespace {

void attach_options(CLI::App& app, qgf::RunConfig& cfg) {
    app.add_option("--market.mu", cfg.mu, "index drift coefficient");
    app.add_option("--market.sigma", cfg.sigma, "index volatility coefficient");
    app.add_option("--market.alpha", cfg.alpha, "asset drift");
    app.add_option("--market.beta", cfg.beta, "asset volatility");
    app.add_option("--market.rho", cfg.rho, "correlation of the driving motions");
    app.add_option("--market.r0", cfg.r0, "index spot");
    app.add_option("--market.s0", cfg.s0, "asset spot");
    app.add_option("--market.eta", cfg.eta, "risk aversion");
    app.add_option("--market.horizon", cfg.horizon, "maturity in years");

    app.add_option("--payoff.kind", cfg.payoff_kind, "put or call");
    app.add_option("--strike,--payoff.strike", cfg.strike, "strike");
    app.add_option("--payoff.cap", cfg.cap, "terminal bound (calls require one)");

    app.add_option("--steps,--numerics.steps", cfg.steps, "time steps");
    app.add_option("--paths,--numerics.paths", cfg.paths, "Monte Carlo paths");
    app.add_option("--numerics.tolerance", cfg.tolerance, "Picard stop on |change of Y0|");
    app.add_option("--numerics.max_iterations", cfg.max_iterations, "Picard sweep cap");
    app.add_option("--numerics.basis_degrees", cfg.basis_degrees,
                   "monomial degrees of the regression basis");
    app.add_option("--scheme,--numerics.scheme", cfg.scheme,
                   "picard-lsmc or one-pass-backward");
    app.add_option("--numerics.stepping", cfg.stepping, "exact or euler");
    app.add_option("--threads,--numerics.threads", cfg.threads, "worker threads");

    app.add_option("--rho,--study.rho_list", cfg.rho_list,
                   "correlation levels for sweeps")
        ->delimiter(',');
    app.add_option("--study.refinements", cfg.refinements, "grid refinements")
        ->delimiter(',');
    app.add_option("--levels,--study.levels", cfg.levels, "truncation levels")
        ->delimiter(',');
    app.add_option("--study.strikes", cfg.strikes, "strike sweep")->delimiter(',');
    app.add_option("--study.spots", cfg.spots, "spot sweep")->delimiter(',');
    app.add_option("--study.scaling_spans", cfg.scaling_spans, "spans in grid steps")
        ->delimiter(',');
    app.add_option("--study.scaling_powers", cfg.scaling_powers, "moment powers")
        ->delimiter(',');
    app.add_option("--study.paths", cfg.study_paths, "paths used by studies");
    app.add_option("--study.path_strike", cfg.path_strike,
                   "strike of the price/strategy path outputs");
    app.add_flag("--study.regularity_solver_mode", cfg.regularity_solver_mode,
                 "measure regularity on LSMC output instead of the analytic case "
                 "(regression noise enters the statistic)");

    app.add_option("--seed,--seed.master", cfg.seed, "master seed");
    app.add_option("--seed.stream", cfg.stream, "stream id");

    app.add_option("--out,--output.dir", cfg.out_dir, "output directory");
    app.add_option("--output.sim_paths", cfg.sim_paths,
                   "paths written by the simulate command");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Numerical engine for FBSDE with quadratic-growth drivers: "
                 "exponential-utility indifference pricing, driver truncation and "
                 "path-regularity studies"};
    app.require_subcommand(1);

    qgf::RunConfig cfg;
    app.set_config("--config", "", "configuration file ([section] key=value)");
    app.allow_config_extras(false);
    attach_options(app, cfg);

    auto* sim = app.add_subcommand("simulate", "write index/asset sample paths");
    auto* price = app.add_subcommand("price", "write indifference price and hedge CSVs");
    auto* study = app.add_subcommand("study", "run a verification study");
    std::string which = "regularity";
    study->add_option("which", which, "regularity, truncation or sde-scaling")
        ->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : qgf::kExitConfig;
    }

    try {
        if (sim->parsed()) return qgf::cmd_simulate(cfg);
        if (price->parsed()) return qgf::cmd_price(cfg);
        if (study->parsed()) return qgf::cmd_study(cfg, which);
    } catch (const qgf::ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return qgf::kExitConfig;
    } catch (const qgf::NumericalError& e) {
        std::cerr << "numerical error: " << e.what() << "\n";
        return qgf::kExitNumerical;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return qgf::kExitNumerical;
    }
    return qgf::kExitConfig;
}
