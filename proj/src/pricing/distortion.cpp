#include "qgf/pricing/distortion.hpp"

#include <cmath>

#include "qgf/core/math.hpp"

namespace qgf {

std::pair<double, double> distortion_oracle(const MarketModel& model,
                                            const PayoffSpec& payoff, int samples,
                                            const SeedSpec& seed) {
    if (!model.geometric_index() || !model.constant_asset())
        throw ConfigError("distortion_oracle: requires the geometric index and a "
                          "constant market price of risk");
    if (samples < 2) throw ConfigError("distortion_oracle: need at least two samples");

    const double th = model.alpha_bar / model.beta_bar;
    const double gamma = -model.eta * (1.0 - model.rho * model.rho);
    const double t_end = model.horizon;
    const double shifted_drift = model.mu_bar - model.rho * th * model.sigma_bar;
    const double log_drift = (shifted_drift - 0.5 * model.sigma_bar * model.sigma_bar) * t_end;
    const double vol = model.sigma_bar * std::sqrt(t_end);

    Eigen::VectorXd values(samples);
    const bool degenerate = std::abs(gamma) < 1e-12;
    for (int i = 0; i < samples; ++i) {
        const double xi = normal_draw(seed, i, 0, 2);
        const double r_end = model.r0 * std::exp(log_drift + vol * xi);
        const double f = payoff(r_end);
        values(i) = degenerate ? f : std::exp(gamma * f);
    }
    const auto [mean, se] = mean_and_stderr(values);
    if (degenerate) return {mean, se};
    if (!(mean > 0.0))
        throw NumericalError("distortion_oracle: Monte Carlo mean not positive");
    return {std::log(mean) / gamma, se / (std::abs(gamma) * mean)};
}

} // namespace qgf
