#include "photon_router/analytic.hpp"

#include <cmath>

namespace pr::analytic {

CorrelationGrid cascade_grid(const RateSet& r, const std::vector<double>& t_axis,
                             const std::vector<double>& tau_axis);

namespace {

CorrelationGrid empty_grid(const std::vector<double>& t_axis, const std::vector<double>& tau_axis)
{
    CorrelationGrid grid;
    grid.t_axis = t_axis;
    grid.tau_axis = tau_axis;
    for (auto& v : grid.values) v.assign(t_axis.size() * tau_axis.size(), 0.0);
    return grid;
}

// Two-level router surfaces. The feeder's two-photon amplitudes are passed
// in so the entangled source can reuse the same collapse structure.
CorrelationGrid router_grid(const RateSet& r, const std::vector<double>& alpha,
                            const std::vector<double>& beta, const std::vector<double>& tau_axis,
                            const std::vector<double>& t_axis)
{
    auto grid = empty_grid(t_axis, tau_axis);
    std::vector<TwoLevelAmplitudes> after;
    for (double tau : tau_axis) after.push_back(two_level_amplitudes(r, tau));
    const std::size_t m = tau_axis.size();
    for (std::size_t i = 0; i < t_axis.size(); ++i) {
        TwoLevelAmplitudes at{};
        at.alpha = alpha[i];
        at.beta = beta[i];
        for (std::size_t j = 0; j < m; ++j) {
            const double k = r.kappa_s, g = r.gamma_c;
            const double lead = std::sqrt(2 * k) * at.alpha + std::sqrt(g) * at.beta;
            const auto& y = after[j];
            const double fwd = std::sqrt(k) * y.a + std::sqrt(g) * y.b;
            const double tr = std::sqrt(g) * (lead * y.b + std::sqrt(k) * at.beta * y.c);
            const double rt = std::sqrt(g) * at.beta * fwd;
            const double rr = g * at.beta * y.b;
            const double tt = lead * fwd + std::sqrt(g * k) * at.beta * y.c;
            grid.values[TR][i * m + j] = 4 * tr * tr;
            grid.values[RT][i * m + j] = 4 * rt * rt;
            grid.values[RR][i * m + j] = 4 * rr * rr;
            grid.values[TT][i * m + j] = 4 * tt * tt;
        }
    }
    return grid;
}

// Probability that both source photons are detected, in units of kappa'_s.
double entangled_detected_weight(const ScenarioConfig& c)
{
    const RateSet& r = c.rates;
    const auto [lo, hi] = rate_scales(c);
    const auto axis = graded_axis(12.0 / lo, 1.0 / hi, 4001);
    const auto w = quadrature_weights(axis);
    double total = 0;
    for (std::size_t i = 0; i < axis.size(); ++i) {
        const auto A = entangled_source_amplitudes(r, axis[i]);
        const double lead = std::sqrt(2 * r.kappa_s) * A.alpha + std::sqrt(r.gamma_c) * A.beta;
        const double rate = 2 * lead * lead + 2 * (r.kappa_s + r.gamma_c) * A.beta * A.beta;
        total += w[i] * rate;
    }
    return total;
}

} // namespace

RoutingProbabilities probabilities(const ScenarioConfig& config)
{
    const ScenarioConfig c = validate(config);
    switch (c.scenario) {
    case Scenario::TwoLevelRouter:
        return two_level_probabilities(c.rates);
    case Scenario::EntangledSourceRouter:
        return entangled_source_probabilities(c.rates);
    case Scenario::TwoStageCascade:
        return cascade_probabilities(c.rates, c.quad_points);
    case Scenario::SingleSidedBunching:
        // one port: every photon leaves through it
        return make_probabilities(0, 0, 0, 1);
    case Scenario::LambdaRouter: {
        if (c.photon_number != 2) {
            throw config_error("lambda router probabilities need photon_number 2; P_V(n) is reported separately");
        }
        const auto L = lambda_routing(c.rates);
        return make_probabilities(L.p_hv, L.p_vh, 0.0, 1.0 - L.c_tr);
    }
    }
    throw config_error("unknown scenario");
}

CorrelationGrid correlation_surfaces(const ScenarioConfig& config, const std::vector<double>& t_axis,
                                     const std::vector<double>& tau_axis)
{
    const ScenarioConfig c = validate(config);
    const RateSet& r = c.rates;
    switch (c.scenario) {
    case Scenario::TwoLevelRouter: {
        std::vector<double> alpha, beta;
        for (double t : t_axis) {
            const auto A = two_level_amplitudes(r, t);
            alpha.push_back(A.alpha);
            beta.push_back(A.beta);
        }
        return router_grid(r, alpha, beta, tau_axis, t_axis);
    }
    case Scenario::EntangledSourceRouter: {
        // condition on both photons reaching the feeder
        const double scale = 1.0 / std::sqrt(entangled_detected_weight(c));
        std::vector<double> alpha, beta;
        for (double t : t_axis) {
            const auto A = entangled_source_amplitudes(r, t);
            alpha.push_back(scale * A.alpha);
            beta.push_back(scale * A.beta);
        }
        return router_grid(r, alpha, beta, tau_axis, t_axis);
    }
    case Scenario::TwoStageCascade:
        return cascade_grid(r, t_axis, tau_axis);
    case Scenario::SingleSidedBunching: {
        auto grid = empty_grid(t_axis, tau_axis);
        const double k = r.kappa_s;
        for (std::size_t i = 0; i < t_axis.size(); ++i) {
            for (std::size_t j = 0; j < tau_axis.size(); ++j) {
                const double f = single_sided_joint_amplitude(r, t_axis[i], tau_axis[j]);
                grid.values[TT][i * tau_axis.size() + j] = 8 * k * k * f * f;
            }
        }
        return grid;
    }
    case Scenario::LambdaRouter:
        throw config_error("the lambda router has no closed-form correlation surfaces; use the trajectory engine");
    }
    throw config_error("unknown scenario");
}

} // namespace pr::analytic
