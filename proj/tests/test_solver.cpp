#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "qgf/market/simulate.hpp"
#include "qgf/solver/lsmc.hpp"

using namespace qgf;

namespace {

MarketModel reference_model() {
    MarketModel m;
    return m;
}

PathBatch make_batch(const MarketModel& m, int steps, int paths, std::uint64_t seed) {
    return simulate_index(m, TimeGrid(m.horizon, steps), paths, {seed, 0});
}

const DriverFn zero_driver = [](double, double, double, double) { return 0.0; };

} // namespace

TEST_CASE("regression recovers representable functions") {
    const int m = 4000;
    Eigen::VectorXd states(m);
    for (int i = 0; i < m; ++i) states(i) = 100.0 + 150.0 * i / (m - 1);

    SUBCASE("identity with basis {1, x}") {
        RegressionBasis basis;
        basis.degrees = {0, 1};
        const auto fit = regress(states, states, basis);
        CHECK((fit.fitted - states).cwiseAbs().maxCoeff() < 1e-10);
    }

    SUBCASE("mean with basis {1}") {
        RegressionBasis basis;
        basis.degrees = {0};
        Eigen::VectorXd noise(m);
        for (int i = 0; i < m; ++i) noise(i) = ((i % 2) ? 1.0 : -1.0) * (1.0 + i % 7);
        const auto fit = regress(noise, states, basis);
        CHECK(fit.fitted(0) == doctest::Approx(noise.mean()).epsilon(1e-12));
        CHECK((fit.fitted.array() == fit.fitted(0)).all());
    }

    SUBCASE("exact quadratic recovery") {
        RegressionBasis basis;
        basis.degrees = {0, 1, 2};
        const Eigen::VectorXd values = states.array().square();
        const auto fit = regress(values, states, basis);
        CHECK((fit.fitted - values).cwiseAbs().maxCoeff() / values.maxCoeff() < 1e-8);
    }

    SUBCASE("residuals orthogonal to the basis columns") {
        RegressionBasis basis;
        basis.degrees = {0, 1, 2, 3, 4};
        basis.extra = [](double x) { return std::max(180.0 - x, 0.0); };
        Eigen::VectorXd values(m);
        for (int i = 0; i < m; ++i)
            values(i) = std::sin(states(i) / 40.0) * 25.0 + ((i % 3) - 1.0);
        const auto fit = regress(values, states, basis);
        const Eigen::VectorXd resid = values - fit.fitted;
        // check against the raw columns; scaling does not change the span
        for (int d = 0; d <= 4; ++d) {
            const Eigen::VectorXd col =
                ((states.array() - fit.state_mean) / fit.state_sd).pow(d);
            CHECK(std::abs(resid.dot(col)) / m < 1e-6);
        }
    }
}

TEST_CASE("regression error paths") {
    RegressionBasis basis;
    basis.degrees = {0, 1};
    Eigen::VectorXd v(1), s(1);
    v << 1.0;
    s << 2.0;
    CHECK_THROWS_AS(regress(v, s, basis), ConfigError); // fewer paths than columns

    Eigen::VectorXd v2(4), s2(4);
    v2 << 1, 2, 3, std::nan("");
    s2 << 1, 2, 3, 4;
    CHECK_THROWS_AS(regress(v2, s2, basis), NumericalError);
}

TEST_CASE("constant terminal with zero driver stays constant") {
    const auto batch = make_batch(reference_model(), 20, 3000, 31);
    SolverConfig cfg;
    const auto sol = solve_lipschitz(zero_driver, [](double) { return 7.5; }, batch, cfg);
    CHECK(sol.converged);
    CHECK(sol.y0 == doctest::Approx(7.5).epsilon(1e-12));
    CHECK((sol.y.array() - 7.5).abs().maxCoeff() < 1e-10);
    CHECK(sol.z.cwiseAbs().maxCoeff() < 1e-8);
}

TEST_CASE("terminal pinning is exact per path") {
    const auto batch = make_batch(reference_model(), 10, 500, 32);
    SolverConfig cfg;
    auto terminal = [](double x) { return std::max(180.0 - x, 0.0); };
    const auto sol = solve_lipschitz(zero_driver, terminal, batch, cfg);
    for (int p = 0; p < batch.paths(); ++p)
        CHECK(sol.y(p, 10) == terminal(batch.states(p, 10)));
}

TEST_CASE("linear driver reproduces the scalar exponential") {
    // f = a y with constant terminal c has Y_0 = c e^{aT}; at N=100 the
    // implicit fixed point (1 - a h)^{-N} sits within 1e-3 of it.
    const auto batch = make_batch(reference_model(), 100, 2000, 33);
    SolverConfig cfg;
    const double a = 0.1, c = 2.0;
    const auto sol = solve_lipschitz([a](double, double, double y, double) { return a * y; },
                                     [c](double) { return c; }, batch, cfg);
    CHECK(sol.converged);
    CHECK(std::abs(sol.y0 - c * std::exp(a)) < 1e-3 * c);
    CHECK(sol.iterations >= 1);
}

TEST_CASE("zero-driver put matches the lognormal integral") {
    const MarketModel m = reference_model();
    const double strike = 180.0;
    const auto batch = make_batch(m, 50, 20000, 34);
    SolverConfig cfg;
    cfg.basis.extra = [strike](double x) { return std::max(strike - x, 0.0); };
    const auto sol = solve_lipschitz(
        zero_driver, [strike](double x) { return std::max(strike - x, 0.0); }, batch, cfg);

    const double oracle = oracles::lognormal_put(m.r0, m.mu_bar, m.sigma_bar, 1.0, strike);
    CHECK(sol.converged);
    CHECK(std::abs(sol.y0 - oracle) <= 3.0 * sol.y0_stderr + 0.002 * oracle);
}

TEST_CASE("picard stopping and history") {
    const auto batch = make_batch(reference_model(), 40, 4000, 35);
    SolverConfig cfg;
    cfg.tolerance = 1e-5;
    const auto sol = solve_lipschitz(
        [](double, double, double y, double) { return 0.05 * y; },
        [](double x) { return std::max(180.0 - x, 0.0); }, batch, cfg);
    CHECK(sol.converged);
    REQUIRE(sol.y0_history.size() >= 2);
    const auto n = sol.y0_history.size();
    CHECK(std::abs(sol.y0_history[n - 1] - sol.y0_history[n - 2]) < cfg.tolerance);

    SolverConfig strangled = cfg;
    strangled.max_iterations = 1;
    const auto short_run = solve_lipschitz(
        [](double, double, double y, double) { return 0.05 * y; },
        [](double x) { return std::max(180.0 - x, 0.0); }, batch, strangled);
    CHECK_FALSE(short_run.converged);
    CHECK(short_run.iterations == 1);
}

TEST_CASE("one-pass backward agrees with picard on a lipschitz instance") {
    const auto batch = make_batch(reference_model(), 50, 8000, 36);
    auto driver = [](double, double, double y, double z) { return 0.1 * y - 0.2 * z; };
    auto terminal = [](double x) { return std::max(180.0 - x, 0.0); };
    SolverConfig cfg;
    cfg.basis.extra = terminal;
    const auto picard = solve_lipschitz(driver, terminal, batch, cfg);
    SolverConfig one_pass = cfg;
    one_pass.scheme = SolverConfig::Scheme::one_pass_backward;
    const auto direct = solve_lipschitz(driver, terminal, batch, one_pass);
    CHECK(direct.converged);
    CHECK(direct.iterations == 1);
    // both are O(h)-consistent discretizations of the same equation
    CHECK(std::abs(picard.y0 - direct.y0) < 0.01 * std::abs(picard.y0) + 0.05);
}

TEST_CASE("value bound from the driver constant and terminal cap") {
    // |Y_t| <= cap + T sup|f(., ., 0, 0)| for this contraction-type driver;
    // asserted with 10% slack.
    const auto batch = make_batch(reference_model(), 50, 8000, 37);
    const double cap = 180.0, f0 = 0.2;
    auto driver = [f0](double, double, double y, double) { return f0 - 0.1 * y; };
    auto terminal = [cap](double x) { return std::min(std::max(180.0 - x, 0.0), cap); };
    SolverConfig cfg;
    cfg.basis.extra = terminal;
    const auto sol = solve_lipschitz(driver, terminal, batch, cfg);
    const double bound = 1.1 * (cap + 1.0 * f0);
    CHECK(sol.y.cwiseAbs().maxCoeff() <= bound);
}

TEST_CASE("truncated solve: inactive truncation is bitwise level-independent") {
    // Scaled-down configuration keeps |Z| < 1, so every level acts as the
    // identity and the solutions agree bitwise under the shared seed.
    MarketModel small = reference_model();
    small.r0 = 0.5;
    small.s0 = 0.52;
    small.rho = 1.0; // gamma = 0: no quadratic term at all
    const auto spec = make_utility_driver(small);
    const auto batch = make_batch(small, 30, 4000, 38);
    auto terminal = [](double x) { return std::max(0.55 - x, 0.0); };
    SolverConfig cfg;
    cfg.basis.extra = terminal;

    const auto a = solve_truncated(spec, 1, terminal, batch, cfg);
    const auto b = solve_truncated(spec, 8, terminal, batch, cfg);
    CHECK(a.z.cwiseAbs().maxCoeff() < 1.0);
    CHECK(a.y == b.y);
    CHECK(a.z == b.z);
}

TEST_CASE("exploding driver reports the failing step") {
    const auto batch = make_batch(reference_model(), 5, 100, 39);
    SolverConfig cfg;
    auto blowup = [](double, double, double y, double) { return y * 1e200; };
    bool threw = false;
    try {
        solve_lipschitz(blowup, [](double) { return 1.0; }, batch, cfg);
    } catch (const NumericalError& e) {
        threw = true;
        CHECK(std::string(e.what()).find("step") != std::string::npos);
    }
    CHECK(threw);
}
