#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "qgf/pricing/distortion.hpp"
#include "qgf/pricing/indifference.hpp"

using namespace qgf;

namespace {

MarketModel reference_model(double rho = 0.5) {
    MarketModel m;
    m.rho = rho;
    return m;
}

SolverConfig quick_cfg() {
    SolverConfig cfg;
    return cfg;
}

} // namespace

TEST_CASE("distortion oracle degenerate cases") {
    const MarketModel m = reference_model(0.5);

    // zero claim prices to exactly zero: log E[1] = 0
    PayoffSpec zero = make_table({0.0, 1000.0}, {0.0, 0.0});
    const auto [p0, se] = distortion_oracle(m, zero, 1000, {1, 0});
    CHECK(p0 == 0.0);

    // non-constant theta rejected
    MarketModel varying = m;
    varying.beta_fn = [](double, double r) { return 0.3 + 0.0001 * r; };
    CHECK_THROWS_AS(distortion_oracle(varying, make_put(180.0), 100, {1, 0}), ConfigError);
}

TEST_CASE("distortion oracle limits") {
    // rho -> 1: the price tends to the shifted-drift expectation of the
    // payoff, i.e. the lognormal put integral under mu - theta sigma.
    MarketModel m = reference_model(1.0);
    const double strike = 180.0;
    const int samples = 400000;
    const auto [p0, se] = distortion_oracle(m, make_put(strike), samples, {5, 0});
    const double th = m.alpha_bar / m.beta_bar;
    const double shifted = m.mu_bar - th * m.sigma_bar;
    const double oracle = oracles::lognormal_put(m.r0, shifted, m.sigma_bar, 1.0, strike);
    CHECK(std::abs(p0 - oracle) <= 3.0 * se);

    // eta -> 0 with rho = 0: same limit with the undistorted drift shift
    MarketModel tame = reference_model(0.0);
    tame.eta = 1e-8;
    const auto [p0_tame, se_tame] = distortion_oracle(tame, make_put(strike), samples, {6, 0});
    const double oracle_tame =
        oracles::lognormal_put(tame.r0, tame.mu_bar, tame.sigma_bar, 1.0, strike);
    CHECK(std::abs(p0_tame - oracle_tame) <= 3.0 * se_tame + 1e-4 * strike);
}

TEST_CASE("optimal strategy arithmetic") {
    const MarketModel m = reference_model(0.0);
    const double th = 0.1 / 0.35;

    PathBatch batch;
    batch.grid = TimeGrid(1.0, 2);
    batch.states = Eigen::MatrixXd::Constant(1, 3, 170.0);
    batch.dw1 = Eigen::MatrixXd::Zero(1, 2);
    batch.dw2 = Eigen::MatrixXd::Zero(1, 2);

    BsdeSolution sol;
    sol.grid = batch.grid;
    sol.y = Eigen::MatrixXd::Zero(1, 3);
    sol.z = Eigen::MatrixXd::Zero(1, 2);

    // rho = 0: constant in Z, lambda = theta / (eta beta) = 2.72109
    sol.z(0, 0) = 123.0;
    auto lambda = optimal_strategy(sol, m, batch);
    CHECK(lambda(0, 0) == doctest::Approx(th / (0.3 * 0.35)).epsilon(1e-12));
    CHECK(lambda(0, 0) == doctest::Approx(2.7210884354).epsilon(1e-9));

    // rho = 0.5, Z = 0.1 shifts by -(rho/beta) Z
    const MarketModel half = reference_model(0.5);
    sol.z(0, 0) = 0.1;
    lambda = optimal_strategy(sol, half, batch);
    CHECK(lambda(0, 0) ==
          doctest::Approx(th / (0.3 * 0.35) - (0.5 / 0.35) * 0.1).epsilon(1e-12));
    CHECK(lambda(0, 0) == doctest::Approx(2.5782312925).epsilon(1e-9));
}

TEST_CASE("zero claim prices to zero through the pipeline") {
    const MarketModel m = reference_model(0.5);
    PayoffSpec zero = make_table({0.0, 2000.0}, {0.0, 0.0});
    const auto report =
        price_indifference(m, zero, TimeGrid(1.0, 10), 2000, {7, 0}, quick_cfg());
    CHECK(report.converged);
    CHECK(std::abs(report.p0) < 1e-10);
    CHECK(report.price.cwiseAbs().maxCoeff() < 1e-8);
}

TEST_CASE("pipeline agrees with the distortion oracle at modest size") {
    const MarketModel m = reference_model(0.5);
    const PayoffSpec put = make_put(200.0);
    const TimeGrid grid(1.0, 50);
    const auto report = price_indifference(m, put, grid, 30000, {8, 0}, quick_cfg());
    const auto [oracle_p0, oracle_se] = distortion_oracle(m, put, 400000, {9, 0});

    CHECK(report.converged);
    CHECK(report.p0 > 0.0);
    CHECK(report.p0 < put.strike);
    const double tol =
        3.0 * std::hypot(report.p0_stderr, oracle_se) + 0.005 * put.strike;
    CHECK(std::abs(report.p0 - oracle_p0) <= tol);
}

TEST_CASE("perfect correlation bypasses the transform") {
    const MarketModel m = reference_model(1.0);
    const PayoffSpec put = make_put(180.0);
    const auto report =
        price_indifference(m, put, TimeGrid(1.0, 50), 30000, {10, 0}, quick_cfg());
    const auto [oracle_p0, oracle_se] = distortion_oracle(m, put, 400000, {11, 0});
    CHECK(report.converged);
    CHECK(std::abs(report.p0 - oracle_p0) <=
          3.0 * std::hypot(report.p0_stderr, oracle_se) + 0.005 * put.strike);
}

TEST_CASE("price report shape and metadata") {
    const MarketModel m = reference_model(0.2);
    const PayoffSpec put = make_put(180.0);
    const TimeGrid grid(1.0, 8);
    const auto report = price_indifference(m, put, grid, 1500, {12, 3}, quick_cfg());
    CHECK(report.price.rows() == 1500);
    CHECK(report.price.cols() == 9);
    CHECK(report.strategy.cols() == 8);
    CHECK(report.price_mean.size() == 9);
    CHECK(report.p0_stderr > 0.0);
    CHECK(report.rho == 0.2);
    CHECK(report.eta == 0.3);
    CHECK(report.seed.master == 12);
    CHECK(report.seed.stream == 3);
    CHECK(report.iterations_claim >= 1);
    // time-zero price is the difference of the two time-zero values
    CHECK(report.p0 == doctest::Approx(report.price_mean(0)).epsilon(1e-10));
}
